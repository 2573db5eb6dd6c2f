#include "voight/grid.hpp"

#include <cmath>

namespace voight {

namespace {

inline int wrap(int i, int n) { return (i % n + n) % n; }

inline int sgn(double v) { return (v > 0.0) - (v < 0.0); }

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* op) {
    if (!(a == b)) throw ShapeError(std::string(op) + ": fields live on different grids");
}

void require_finite(const ScalarField& f, const char* op) {
    if (!f.all_finite()) throw NonFiniteError(std::string(op) + ": non-finite input");
}

}  // namespace

bool ScalarField::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

bool VectorField::all_finite() const {
    for (double x : u1_)
        if (!std::isfinite(x)) return false;
    for (double x : u2_)
        if (!std::isfinite(x)) return false;
    return true;
}

ScalarField laplacian(const ScalarField& f) {
    require_finite(f, "laplacian");
    const Grid2D& g = f.grid();
    ScalarField out(g);
    const double ax = 1.0 / (g.dx * g.dx);
    const double ay = 1.0 / (g.dy * g.dy);
    if (g.boundary == BoundaryKind::periodic) {
        for (int j = 0; j < g.ny; ++j) {
            const int jm = wrap(j - 1, g.ny), jp = wrap(j + 1, g.ny);
            for (int i = 0; i < g.nx; ++i) {
                const int im = wrap(i - 1, g.nx), ip = wrap(i + 1, g.nx);
                out(i, j) = ax * (f(ip, j) + f(im, j) - 2.0 * f(i, j)) +
                            ay * (f(i, jp) + f(i, jm) - 2.0 * f(i, j));
            }
        }
    } else {
        for (int j = 1; j < g.ny - 1; ++j)
            for (int i = 1; i < g.nx - 1; ++i)
                out(i, j) = ax * (f(i + 1, j) + f(i - 1, j) - 2.0 * f(i, j)) +
                            ay * (f(i, j + 1) + f(i, j - 1) - 2.0 * f(i, j));
    }
    return out;
}

VectorField gradient(const ScalarField& f) {
    require_finite(f, "gradient");
    const Grid2D& g = f.grid();
    VectorField out(g);
    const double cx = 1.0 / (2.0 * g.dx);
    const double cy = 1.0 / (2.0 * g.dy);
    if (g.boundary == BoundaryKind::periodic) {
        for (int j = 0; j < g.ny; ++j) {
            const int jm = wrap(j - 1, g.ny), jp = wrap(j + 1, g.ny);
            for (int i = 0; i < g.nx; ++i) {
                const int im = wrap(i - 1, g.nx), ip = wrap(i + 1, g.nx);
                out.u1(i, j) = cx * (f(ip, j) - f(im, j));
                out.u2(i, j) = cy * (f(i, jp) - f(i, jm));
            }
        }
    } else {
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                if (i == 0)
                    out.u1(i, j) = (f(1, j) - f(0, j)) / g.dx;
                else if (i == g.nx - 1)
                    out.u1(i, j) = (f(i, j) - f(i - 1, j)) / g.dx;
                else
                    out.u1(i, j) = cx * (f(i + 1, j) - f(i - 1, j));
                if (j == 0)
                    out.u2(i, j) = (f(i, 1) - f(i, 0)) / g.dy;
                else if (j == g.ny - 1)
                    out.u2(i, j) = (f(i, j) - f(i, j - 1)) / g.dy;
                else
                    out.u2(i, j) = cy * (f(i, j + 1) - f(i, j - 1));
            }
        }
    }
    return out;
}

VectorField perp_gradient(const ScalarField& I) {
    VectorField grad = gradient(I);
    const Grid2D& g = I.grid();
    VectorField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            out.u1(i, j) = -grad.u2(i, j);
            out.u2(i, j) = grad.u1(i, j);
        }
    }
    return out;
}

ScalarField upwind_advect(const ScalarField& omega, const VectorField& u, UpwindMode mode) {
    require_same_grid(omega.grid(), u.grid(), "upwind_advect");
    const Grid2D& g = omega.grid();
    ScalarField out(g);
    const bool paper = (mode == UpwindMode::paper_exact);

    auto term = [&](int i, int j, int ip, int im, int jp, int jm) {
        const double v1 = u.u1(i, j), v2 = u.u2(i, j);
        const int s1 = sgn(v1), s2 = sgn(v2);
        double t = 0.0;
        if (s1 != 0) {
            const int n1 = (s1 > 0) ? ip : im;          // node at i + sgn(u1)
            const int b1 = (s1 > 0) ? im : ip;          // node at i - sgn(u1)
            const double d = paper ? (omega(n1, j) - omega(i, j))
                                   : (omega(i, j) - omega(b1, j));
            t -= std::abs(v1) * s1 * d / g.dx;
        }
        if (s2 != 0) {
            const int n2 = (s2 > 0) ? jp : jm;
            const int b2 = (s2 > 0) ? jm : jp;
            const double d = paper ? (omega(i, n2) - omega(i, j))
                                   : (omega(i, j) - omega(i, b2));
            t -= std::abs(v2) * s2 * d / g.dy;
        }
        return t;
    };

    if (g.boundary == BoundaryKind::periodic) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j) = term(i, j, wrap(i + 1, g.nx), wrap(i - 1, g.nx),
                                 wrap(j + 1, g.ny), wrap(j - 1, g.ny));
    } else {
        for (int j = 1; j < g.ny - 1; ++j)
            for (int i = 1; i < g.nx - 1; ++i)
                out(i, j) = term(i, j, i + 1, i - 1, j + 1, j - 1);
    }
    return out;
}

ScalarField aniso_divergence(const ScalarField& omega, const ScalarField& g_field) {
    require_same_grid(omega.grid(), g_field.grid(), "aniso_divergence");
    for (double v : g_field.values())
        if (!(v > 0.0)) throw std::invalid_argument("aniso_divergence: g must be positive");
    const Grid2D& g = omega.grid();
    ScalarField out(g);
    const double ax = 1.0 / (g.dx * g.dx);
    const double ay = 1.0 / (g.dy * g.dy);

    auto at = [&](int i, int j, int ip, int im, int jp, int jm) {
        const double ge = 0.5 * (g_field(i, j) + g_field(ip, j));
        const double gw = 0.5 * (g_field(i, j) + g_field(im, j));
        const double gn = 0.5 * (g_field(i, j) + g_field(i, jp));
        const double gs = 0.5 * (g_field(i, j) + g_field(i, jm));
        return ax * (ge * (omega(ip, j) - omega(i, j)) - gw * (omega(i, j) - omega(im, j))) +
               ay * (gn * (omega(i, jp) - omega(i, j)) - gs * (omega(i, j) - omega(i, jm)));
    };

    if (g.boundary == BoundaryKind::periodic) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j) = at(i, j, wrap(i + 1, g.nx), wrap(i - 1, g.nx),
                               wrap(j + 1, g.ny), wrap(j - 1, g.ny));
    } else {
        for (int j = 1; j < g.ny - 1; ++j)
            for (int i = 1; i < g.nx - 1; ++i)
                out(i, j) = at(i, j, i + 1, i - 1, j + 1, j - 1);
    }
    return out;
}

double stability_constant(const Grid2D& g) {
    return std::sqrt(4.0 * (1.0 / (g.dx * g.dx) + 1.0 / (g.dy * g.dy)));
}

double l2_norm_sq(const ScalarField& f) {
    const double w = f.grid().dx * f.grid().dy;
    double s = 0.0;
    for (double v : f.values()) s += v * v;
    return w * s;
}

double l2_norm_sq(const VectorField& u) {
    const double w = u.grid().dx * u.grid().dy;
    double s = 0.0;
    for (double v : u.u1_values()) s += v * v;
    for (double v : u.u2_values()) s += v * v;
    return w * s;
}

double l2_inner(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid(), "l2_inner");
    const double w = a.grid().dx * a.grid().dy;
    double s = 0.0;
    const auto& av = a.values();
    const auto& bv = b.values();
    for (size_t k = 0; k < av.size(); ++k) s += av[k] * bv[k];
    return w * s;
}

double h_seminorm_sq(const ScalarField& f) {
    const Grid2D& g = f.grid();
    if (g.boundary != BoundaryKind::periodic)
        throw std::invalid_argument("h_seminorm_sq: periodic grid required");
    const double w = g.dx * g.dy;
    const double ax = 1.0 / (g.dx * g.dx);
    const double ay = 1.0 / (g.dy * g.dy);
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        const int jp = wrap(j + 1, g.ny);
        for (int i = 0; i < g.nx; ++i) {
            const int ip = wrap(i + 1, g.nx);
            const double fx = f(ip, j) - f(i, j);
            const double fy = f(i, jp) - f(i, j);
            s += ax * fx * fx + ay * fy * fy;
        }
    }
    return w * s;
}

double h_seminorm_sq(const VectorField& u) {
    const Grid2D& g = u.grid();
    if (g.boundary != BoundaryKind::periodic)
        throw std::invalid_argument("h_seminorm_sq: periodic grid required");
    ScalarField c1(g), c2(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            c1(i, j) = u.u1(i, j);
            c2(i, j) = u.u2(i, j);
        }
    return h_seminorm_sq(c1) + h_seminorm_sq(c2);
}

double laplacian_norm_sq(const VectorField& u) {
    const Grid2D& g = u.grid();
    ScalarField c1(g), c2(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            c1(i, j) = u.u1(i, j);
            c2(i, j) = u.u2(i, j);
        }
    return l2_norm_sq(laplacian(c1)) + l2_norm_sq(laplacian(c2));
}

}  // namespace voight
