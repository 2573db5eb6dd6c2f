#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace voight {

enum class BoundaryKind { dirichlet, periodic };

/// Uniform rectangular grid. Stencil operators need at least one interior
/// layer, hence nx, ny >= 3.
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double dx = 1.0;
    double dy = 1.0;
    BoundaryKind boundary = BoundaryKind::dirichlet;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double dx_ = 1.0, double dy_ = 1.0,
           BoundaryKind boundary_ = BoundaryKind::dirichlet)
        : nx(nx_), ny(ny_), dx(dx_), dy(dy_), boundary(boundary_) {
        if (nx < 3 || ny < 3) throw std::invalid_argument("Grid2D: nx and ny must be >= 3");
        if (dx <= 0.0 || dy <= 0.0) throw std::invalid_argument("Grid2D: spacings must be positive");
    }

    bool operator==(const Grid2D&) const = default;
    int cells() const { return nx * ny; }
};

/// Real-valued function sampled on a Grid2D. Storage is row-major in j
/// (index = j*nx + i). Values may become non-finite during a diverging
/// solve; all_finite() is the explicit detector.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid2D& g, double fill = 0.0)
        : grid_(g), v_(static_cast<size_t>(g.cells()), fill) {}

    double& operator()(int i, int j) { return v_[static_cast<size_t>(j) * grid_.nx + i]; }
    double operator()(int i, int j) const { return v_[static_cast<size_t>(j) * grid_.nx + i]; }

    const Grid2D& grid() const { return grid_; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    bool all_finite() const;

private:
    Grid2D grid_;
    std::vector<double> v_;
};

/// Two-component field on a shared grid (u1 = x-component, u2 = y-component).
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Grid2D& g)
        : grid_(g),
          u1_(static_cast<size_t>(g.cells()), 0.0),
          u2_(static_cast<size_t>(g.cells()), 0.0) {}

    double& u1(int i, int j) { return u1_[static_cast<size_t>(j) * grid_.nx + i]; }
    double u1(int i, int j) const { return u1_[static_cast<size_t>(j) * grid_.nx + i]; }
    double& u2(int i, int j) { return u2_[static_cast<size_t>(j) * grid_.nx + i]; }
    double u2(int i, int j) const { return u2_[static_cast<size_t>(j) * grid_.nx + i]; }

    const Grid2D& grid() const { return grid_; }
    std::vector<double>& u1_values() { return u1_; }
    const std::vector<double>& u1_values() const { return u1_; }
    std::vector<double>& u2_values() { return u2_; }
    const std::vector<double>& u2_values() const { return u2_; }

    bool all_finite() const;

private:
    Grid2D grid_;
    std::vector<double> u1_, u2_;
};

/// Advected-neighbor convention for the upwind term. paper_exact takes the
/// neighbor at i + sgn(u1) as printed in the discretized transport equation;
/// classical takes the backward (upwind) node i - sgn(u1).
enum class UpwindMode { paper_exact, classical };

/// 5-point Laplacian. Dirichlet grids: interior nodes only, boundary row of
/// the output is zero (ghost values come from the caller's field). Periodic
/// grids: all nodes, wraparound.
ScalarField laplacian(const ScalarField& f);

/// Central-difference gradient (one-sided on the outermost ring for
/// Dirichlet grids, wraparound for periodic).
VectorField gradient(const ScalarField& f);

/// (-dI/dy, dI/dx): divergence-free advecting field of the stream function.
VectorField perp_gradient(const ScalarField& I);

/// Upwind advection term, sgn(0) = 0 so zero velocity contributes zero.
/// Dirichlet grids: interior nodes only.
ScalarField upwind_advect(const ScalarField& omega, const VectorField& u,
                          UpwindMode mode = UpwindMode::paper_exact);

/// Conservative div(g grad omega) with arithmetic-mean face diffusivity.
/// Reduces exactly to laplacian() when g == 1.
ScalarField aniso_divergence(const ScalarField& omega, const ScalarField& g);

/// S(h) = sqrt(4 (1/dx^2 + 1/dy^2)), the grid stability constant.
double stability_constant(const Grid2D& g);

// Discrete norms (cell-measure weighted). The h-seminorm uses forward
// differences and requires a periodic grid; it is the quantity bounded by
// S(h)^2 |u|^2 in the reverse-Poincare inequality.
double l2_norm_sq(const ScalarField& f);
double l2_norm_sq(const VectorField& u);
double l2_inner(const ScalarField& a, const ScalarField& b);
double h_seminorm_sq(const ScalarField& f);
double h_seminorm_sq(const VectorField& u);
double laplacian_norm_sq(const VectorField& u);

struct NonFiniteError : std::runtime_error {
    explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace voight
