#pragma once

#include "pbdm/fields.hpp"
#include "pbdm/params.hpp"

namespace pbdm {

/// Per-node motility of the limit scheme, routed through the same rounding
/// operator the branches use: D(R(L(h)/dz)*dz). This is exactly the
/// kappa -> infinity limit of the branch construction.
ScalarField2D snapped_D(const ScalarField2D& h_new, const GridSpec& g,
                        const ModelParams& p);

/// Largest stable time step the driver admits for the explicit varrho update:
/// 0.25 * min(dx^2, dy^2) / max(1, max D).
double adm_max_dt(const GridSpec& g, const ModelParams& p);

/// One step of the limit scheme: ADI updates of h and n sourced by varrho^m,
/// then the explicit conservative update of varrho combining arithmetic-mean
/// face diffusion with upwind corrections built from the signed D-differences,
/// plus growth r*n^{m+1}*varrho^m. Throws ConfigError if dt violates the step
/// restriction.
AdmState step_adm(const AdmState& state, const GridSpec& g, const ModelParams& p,
                  int workers = 1);

} // namespace pbdm
