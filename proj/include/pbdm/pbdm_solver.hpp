#pragma once

#include <array>

#include "pbdm/banded.hpp"
#include "pbdm/fields.hpp"

namespace pbdm {

/// The five z-advection branches xi in {l, r, o, b, t}: each advects the same
/// input field against the AHL value of a different spatial neighbour.
enum class Branch : int { l = 0, r = 1, o = 2, b = 3, t = 4 };
inline constexpr std::array<Branch, 5> all_branches{Branch::l, Branch::r, Branch::o,
                                                    Branch::b, Branch::t};

struct BranchSet {
    std::array<InternalField3D, 5> fields;
    InternalField3D& operator[](Branch b) { return fields[int(b)]; }
    const InternalField3D& operator[](Branch b) const { return fields[int(b)]; }
};

/// ADI update of the AHL field: two half-steps, x-implicit then y-implicit,
/// both sourced by alpha * Σ_k rho^m dz and implicit degradation; the second
/// half-step reuses the x-difference of the starred field. Boundary rows are
/// copied (or wrapped for periodic y).
ScalarField2D adi_update_h(const ScalarField2D& h, const InternalField3D& rho,
                           const GridSpec& g, const ModelParams& p, int workers = 1);

/// Same ADI structure for the nutrient, with implicit consumption
/// -gamma * n * Σ_k rho^m dz on each half-step.
ScalarField2D adi_update_n(const ScalarField2D& n, const InternalField3D& rho,
                           const GridSpec& g, const ModelParams& p, int workers = 1);

/// Runs the implicit-upwind z-advection once per branch and column, with the
/// drift evaluated against the branch-shifted h^{m+1} (clamped at no-flux
/// edges, wrapped for periodic y). n^{m+1} feeds the drift in r_times_n mode.
BranchSet z_advection_branches(const InternalField3D& rho, const ScalarField2D& h_new,
                               const ScalarField2D& n_new, const GridSpec& g,
                               const ModelParams& p, int workers = 1);

/// Explicit spatial diffusion-growth update mixing the five branches through
/// the indicator-weighted stencils A_1..A_5, plus growth r*n^{m+1}*rho^{m*,o}.
InternalField3D diffusion_growth_step(const BranchSet& branches, const ScalarField2D& h_new,
                                      const ScalarField2D& n_new, const GridSpec& g,
                                      const ModelParams& p, int workers = 1);

/// One full time step: h, n (both sourced from rho^m), z-advection branches,
/// then diffusion-growth. Throws without touching `state` on any failure.
SimState step_pbdm(const SimState& state, const GridSpec& g, const ModelParams& p,
                   int workers = 1);

} // namespace pbdm
