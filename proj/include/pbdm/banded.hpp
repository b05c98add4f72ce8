#pragma once

#include <span>
#include <vector>

#include "pbdm/model.hpp"

namespace pbdm {

/// Tridiagonal system A x = rhs with sub/super of length n-1 and diag/rhs of
/// length n. The ADI and z-advection assemblies are diagonally dominant; the
/// solver still detects vanishing pivots.
struct TriDiagSystem {
    std::vector<double> sub, diag, super, rhs;
};

/// Thomas algorithm. Throws NumericsError with the pivot index when a pivot
/// falls below 1e-300 in magnitude.
std::vector<double> solve_tridiag(const TriDiagSystem& sys);

/// Workspace-reusing kernel used by the solvers: overwrites rhs with the
/// solution. sub[0] and super[n-1] are ignored. work must have length n.
void solve_tridiag_inplace(std::span<const double> sub, std::span<const double> diag,
                           std::span<const double> super, std::span<double> rhs,
                           std::span<double> work);

/// Cyclic (periodic) tridiagonal solve via Sherman-Morrison; corner entries
/// are sub[0] (row 0, col n-1) and super[n-1] (row n-1, col 0). Overwrites
/// rhs with the solution; needs 3n of workspace.
void solve_cyclic_tridiag_inplace(std::span<const double> sub, std::span<const double> diag,
                                  std::span<const double> super, std::span<double> rhs,
                                  std::span<double> work);

/// One implicit-upwind advection solve along an internal-state column:
/// rho*_k = rho_k - lambda*(J_{k+1/2} - J_{k-1/2}) with
/// J_{k+1/2} = gp_k rho*_k - gm_{k+1} rho*_{k+1} and zero boundary fluxes.
/// Assembles the implied tridiagonal system and solves it. The column sum is
/// conserved exactly (telescoping fluxes) and non-negativity is preserved
/// (M-matrix). lambda = kappa*dt/dz >= 0.
void solve_z_advection_line(std::span<const double> rho_in,
                            std::span<const DriftEval> drift, double lambda,
                            std::span<double> rho_out, std::span<double> work);

/// Convenience allocation-per-call wrapper around the in-place kernel.
std::vector<double> solve_z_advection_line(std::span<const double> rho_in,
                                           std::span<const DriftEval> drift,
                                           double lambda);

} // namespace pbdm
