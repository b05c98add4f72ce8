#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbdm/grid.hpp"

namespace pbdm {

/// Node-indexed 2D array of shape (Nx+1) x (Ny+1); holds h, n or the total
/// density. Row-major with j fastest.
class ScalarField2D {
public:
    ScalarField2D() = default;
    ScalarField2D(int nx_nodes, int ny_nodes, double fill = 0.0)
        : nx_(nx_nodes), ny_(ny_nodes), v_(std::size_t(nx_nodes) * ny_nodes, fill) {}
    explicit ScalarField2D(const GridSpec& g, double fill = 0.0)
        : ScalarField2D(g.Nx + 1, g.Ny + 1, fill) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    double& operator()(int i, int j) { return v_[std::size_t(i) * ny_ + j]; }
    double operator()(int i, int j) const { return v_[std::size_t(i) * ny_ + j]; }

    std::span<double> data() { return v_; }
    std::span<const double> data() const { return v_; }

    bool all_finite() const;
    double min() const;
    double max() const;
    /// Fixed-order sum over all nodes.
    double sum() const;
    /// Fixed-order sum excluding the outermost node rows/columns.
    double interior_sum() const;

private:
    int nx_ = 0, ny_ = 0;
    std::vector<double> v_;
};

/// Node-indexed 3D array of shape (Nx+1) x (Ny+1) x (Nz+1), interpreted as
/// density per unit z (a numerical delta at level k holds mass/dz there).
/// Layout is row-major with k fastest, so each (i,j) column is contiguous.
class InternalField3D {
public:
    InternalField3D() = default;
    InternalField3D(int nx_nodes, int ny_nodes, int nz_nodes, double fill = 0.0)
        : nx_(nx_nodes), ny_(ny_nodes), nz_(nz_nodes),
          v_(std::size_t(nx_nodes) * ny_nodes * nz_nodes, fill) {}
    explicit InternalField3D(const GridSpec& g, double fill = 0.0)
        : InternalField3D(g.Nx + 1, g.Ny + 1, g.Nz + 1, fill) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }

    double& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
    double operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }

    std::span<double> column(int i, int j) {
        return std::span<double>(v_.data() + idx(i, j, 0), std::size_t(nz_));
    }
    std::span<const double> column(int i, int j) const {
        return std::span<const double>(v_.data() + idx(i, j, 0), std::size_t(nz_));
    }

    std::span<double> data() { return v_; }
    std::span<const double> data() const { return v_; }

    bool all_finite() const;
    double min() const;
    double sum() const;
    double interior_sum() const;

private:
    std::size_t idx(int i, int j, int k) const {
        return (std::size_t(i) * ny_ + j) * nz_ + k;
    }
    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<double> v_;
};

/// ϱ_{i,j} = Σ_k ρ_{i,j,k} * dz, summed over the full node range k = 0..Nz.
ScalarField2D total_density(const InternalField3D& rho, double dz);

/// Kinetic-model state at t = m*dt.
struct SimState {
    double time = 0;
    std::int64_t step = 0;
    InternalField3D rho;
    ScalarField2D h, n;
};

/// Limit-model state at t = m*dt.
struct AdmState {
    double time = 0;
    std::int64_t step = 0;
    ScalarField2D varrho, h, n;
};

/// Copies boundary rows from their interior neighbours: u(0,j) = u(1,j),
/// u(Nx,j) = u(Nx-1,j) and likewise in y, or a periodic wrap u(i,Ny) = u(i,0).
void apply_spatial_bc(ScalarField2D& u, const GridSpec& g);
void apply_spatial_bc(InternalField3D& u, const GridSpec& g);

} // namespace pbdm
