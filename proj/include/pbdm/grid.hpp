#pragma once

#include <cstdint>

namespace pbdm {

enum class YBoundary { no_flux, periodic };

/// Uniform node-indexed mesh on [-Lx,Lx] x [-Ly,Ly] x [0,Zw] with time step dt.
/// Nodes: x_i = -Lx + i*dx (i = 0..Nx), y_j = -Ly + j*dy (j = 0..Ny),
/// z_k = k*dz (k = 0..Nz). Extents must be integer multiples of the mesh sizes.
struct GridSpec {
    double Lx = 0, Ly = 0, Zw = 0;
    double dx = 0, dy = 0, dz = 0, dt = 0;
    int Nx = 0, Ny = 0, Nz = 0;
    YBoundary y_boundary = YBoundary::no_flux;

    double x(int i) const { return -Lx + i * dx; }
    double y(int j) const { return -Ly + j * dy; }
    double z(int k) const { return k * dz; }

    bool periodic_y() const { return y_boundary == YBoundary::periodic; }

    std::int64_t nodes2d() const { return std::int64_t(Nx + 1) * (Ny + 1); }
    std::int64_t nodes3d() const { return nodes2d() * (Nz + 1); }
};

/// Builds a GridSpec, rejecting non-divisible extent/mesh pairs (the offending
/// axis is named in the error message) and fewer than 2 cells per axis.
GridSpec make_grid(double Lx, double Ly, double Zw,
                   double dx, double dy, double dz, double dt,
                   YBoundary y_boundary = YBoundary::no_flux);

} // namespace pbdm
