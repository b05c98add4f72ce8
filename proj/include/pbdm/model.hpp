#pragma once

#include "pbdm/params.hpp"

namespace pbdm {

/// Drift value with its sign split: g = gp - gm, gp*gm = 0, gp,gm >= 0.
struct DriftEval {
    double value = 0;
    double gp = 0; // max{0, g}
    double gm = 0; // max{0,-g}
};

/// Steady-state CheZ level L(h) = Zw*(0.5 - 0.5*tanh(mu*(h - h0))).
/// Smooth, non-increasing, L(-inf) = Zw, L(+inf) = 0.
double L_of_h(double h, const ModelParams& p);

/// Motility D(z) for the selected profile; strictly positive and
/// non-decreasing on [0, Zw]. Throws on z outside [0, Zw].
double D_of_z(double z, const ModelParams& p);

/// Volume growth rate: r (constant_r) or r*n_local (r_times_n).
double kv(const ModelParams& p, double n_local);

/// Snapped CheZ level: index k* = nearest integer to L/dz (ties away from
/// zero) and the level k* * dz. Caller guarantees 0 <= L <= Zw.
struct SnappedLevel {
    int index = 0;
    double level = 0;
};
SnappedLevel round_to_grid(double L, double dz);

/// Discrete drift at node z_k against the (branch-shifted) AHL value:
/// g = kv * (R(L(h)/dz)*dz - z_k), returned with its sign split.
/// n_local only enters in r_times_n mode.
DriftEval g_discrete(double z_k, double h_neighbor, const ModelParams& p,
                     double dz, double n_local = 1.0);

/// d/dh of D(L(h)), evaluated analytically:
/// D'(L(h)) * L'(h) with L'(h) = -0.5*Zw*mu*sech^2(mu*(h - h0)).
double dh_of_D(double h, const ModelParams& p);

} // namespace pbdm
