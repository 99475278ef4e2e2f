#pragma once

#include <span>
#include <vector>

#include "rieffel/numerics/linalg.hpp"

namespace rieffel::numerics {

/// Samples psi(x_i, y_j) on x_i = x0 + i dx, y_j = y0 + j dy; values(i, j).
struct ComplexGrid2D {
    CMatrix values;
    double x0 = 0.0, y0 = 0.0;
    double dx = 1.0, dy = 1.0;

    Eigen::Index nx() const { return values.rows(); }
    Eigen::Index ny() const { return values.cols(); }
    double x(Eigen::Index i) const { return x0 + static_cast<double>(i) * dx; }
    double y(Eigen::Index j) const { return y0 + static_cast<double>(j) * dy; }

    /// Throws ValidationError unless nx, ny >= 8, dx, dy > 0 and all samples finite.
    void validate() const;

    template <class F>
    static ComplexGrid2D sample(F&& f, double x0, double x1, Eigen::Index nx, double y0, double y1, Eigen::Index ny) {
        ComplexGrid2D g;
        g.x0 = x0;
        g.y0 = y0;
        g.dx = (x1 - x0) / static_cast<double>(nx - 1);
        g.dy = (y1 - y0) / static_cast<double>(ny - 1);
        g.values.resize(nx, ny);
        for (Eigen::Index i = 0; i < nx; ++i)
            for (Eigen::Index j = 0; j < ny; ++j) g.values(i, j) = f(g.x(i), g.y(j));
        return g;
    }
};

/// Momentum samples on the grid dual to a ComplexGrid2D:
/// p_k = (k - n/2) * 2 pi / (n dx). Keeps the spatial origin and spacing so
/// the transform can be inverted exactly.
struct MomentumGrid2D {
    CMatrix values;
    double px0 = 0.0, py0 = 0.0;
    double dpx = 1.0, dpy = 1.0;
    double x0 = 0.0, y0 = 0.0;  // spatial origin of the analysed grid
    double dx = 1.0, dy = 1.0;  // spatial spacing of the analysed grid

    Eigen::Index nx() const { return values.rows(); }
    Eigen::Index ny() const { return values.cols(); }
    double px(Eigen::Index k) const { return px0 + static_cast<double>(k) * dpx; }
    double py(Eigen::Index k) const { return py0 + static_cast<double>(k) * dpy; }
};

/// psi_check(p) = sum_ij psi(x_i, y_j) exp(+i (p_x x_i + p_y y_j)) dx dy on
/// the dual grid (FFTW, O(n log n)).
MomentumGrid2D analysis_transform(const ComplexGrid2D& grid);

/// Exact inverse of analysis_transform:
/// psi(x) = sum_k psi_check(p_k) exp(-i p_k x) dp_x dp_y / (2 pi)^2.
ComplexGrid2D synthesis_transform(const MomentumGrid2D& momenta);

/// The analysis sum evaluated at one arbitrary momentum (no grid restriction).
Complex momentum_value(const ComplexGrid2D& grid, double px, double py);

/// The analysis sum on a tensor product of momenta, returned as
/// table(a, b) = psi_check(px[a], py[b]). Cost O(|px| nx ny + |px| ny |py|).
CMatrix momentum_table(const ComplexGrid2D& grid, std::span<const double> px, std::span<const double> py);

/// One-dimensional analysis step along y only:
/// out(i, b) = sum_j psi(x_i, y_j) exp(+i p_b y_j) dy.
CMatrix y_transform(const ComplexGrid2D& grid, std::span<const double> p);

}  // namespace rieffel::numerics
