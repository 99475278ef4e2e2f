#include "rieffel/kappa/time_average.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rieffel/error.hpp"
#include "rieffel/numerics/quadrature.hpp"

namespace rieffel::kappa {

namespace {

using std::numbers::pi;

constexpr int kStencil = 6;

// Largest max(|p_x|, |p_y|) on the FFT grid where |psi_check| exceeds rel * max.
double grid_support_radius(const ComplexGrid2D& g, double rel) {
    const numerics::MomentumGrid2D m = numerics::analysis_transform(g);
    const double cut = rel * m.values.cwiseAbs().maxCoeff();
    double r = 0.0;
    for (Eigen::Index k = 0; k < m.nx(); ++k)
        for (Eigen::Index l = 0; l < m.ny(); ++l)
            if (std::abs(m.values(k, l)) > cut) r = std::max({r, std::abs(m.px(k)), std::abs(m.py(l))});
    return r;
}

// 6-point Lagrange weights at fractional position t on nodes i0 .. i0+5.
void lagrange6(double t, int i0, double w[kStencil]) {
    for (int a = 0; a < kStencil; ++a) {
        double num = 1.0, den = 1.0;
        for (int b = 0; b < kStencil; ++b) {
            if (b == a) continue;
            num *= t - (i0 + b);
            den *= static_cast<double>(a - b);
        }
        w[a] = num / den;
    }
}

}  // namespace

Kappa0TimeAverage::Kappa0TimeAverage(const TestFunction& psi, const TestFunction& phi, TimeAverageOptions opts)
    : opts_(opts) {
    if (!(opts.table_step > 0)) throw DomainError("time average: table_step must be positive");
    const double nyq = std::min({pi / psi.grid.dx, pi / psi.grid.dy, pi / phi.grid.dx, pi / phi.grid.dy});
    radius_ = std::min(nyq, std::max(grid_support_radius(psi.grid, opts.support_rel), grid_support_radius(phi.grid, opts.support_rel)) +
                                2.0 * opts.table_step);
    const double reach = radius_ + (kStencil + 1) * opts.table_step;
    const int n = static_cast<int>(std::ceil(2.0 * reach / opts.table_step)) + 1;
    origin_ = -0.5 * (n - 1) * opts.table_step;
    std::vector<double> q(n);
    for (int k = 0; k < n; ++k) q[k] = origin_ + k * opts.table_step;
    psi_table_ = numerics::momentum_table(psi.grid, q, q);
    phi_table_ = numerics::momentum_table(phi.grid, q, q);
}

Complex Kappa0TimeAverage::product(double px, double py) const {
    if (std::abs(px) > radius_ || std::abs(py) > radius_) return 0.0;
    const double tx = (px - origin_) / opts_.table_step, ty = (py - origin_) / opts_.table_step;
    const int ix = static_cast<int>(std::floor(tx)) - kStencil / 2 + 1;
    const int iy = static_cast<int>(std::floor(ty)) - kStencil / 2 + 1;
    double wx[kStencil], wy[kStencil];
    lagrange6(tx, ix, wx);
    lagrange6(ty, iy, wy);
    Complex a = 0.0, b = 0.0;
    for (int r = 0; r < kStencil; ++r) {
        Complex ra = 0.0, rb = 0.0;
        for (int c = 0; c < kStencil; ++c) {
            ra += wy[c] * psi_table_(ix + r, iy + c);
            rb += wy[c] * phi_table_(ix + r, iy + c);
        }
        a += wx[r] * ra;
        b += wx[r] * rb;
    }
    return a * std::conj(b);
}

// int du F(u, v) sin(omega u) / u with p_x = (u + v)/2, p_y = (v - u)/2.
// F(0, v) e^{-u^2} is subtracted and integrated exactly (pi erf(omega/2));
// the smooth remainder is integrated with Gauss panels no wider than one
// period of the sine.
Complex Kappa0TimeAverage::inner_u(double omega, double v) const {
    const Complex f0 = product(0.5 * v, 0.5 * v);
    const double span = std::max(2.0 * radius_ - std::abs(v), 6.5);
    const double width = std::min(0.25, 2.0 * pi / omega);
    const int panels = static_cast<int>(std::ceil(span / width));
    const double w = span / panels;
    const numerics::GaussRule& rule = numerics::gauss_legendre(12);
    Complex rest = 0.0;
    for (int side = -1; side <= 1; side += 2)
        for (int k = 0; k < panels; ++k) {
            const double mid = side * (k + 0.5) * w;
            Complex s = 0.0;
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                const double u = mid + 0.5 * w * rule.nodes[j];
                const Complex g = (product(0.5 * (u + v), 0.5 * (v - u)) - f0 * std::exp(-u * u)) / u;
                s += rule.weights[j] * g * std::sin(omega * u);
            }
            rest += 0.5 * w * s;
        }
    return pi * std::erf(0.5 * omega) * f0 + rest;
}

Complex Kappa0TimeAverage::operator()(double T) const {
    if (!(T >= 0)) throw DomainError("time average: T must be non-negative");
    if (T == 0) return 0.0;
    // int dp_x dp_y = (1/2) int du dv and 2 sin(T u v)/(u v) = 2 sin(T |v| u) / (|v| u).
    auto outer = [&](double v) { return inner_u(T * std::abs(v), v) / std::abs(v); };
    const double vmax = 2.0 * radius_;
    const double knee = std::min(vmax, 10.0 / T);
    numerics::QuadratureOptions qo;
    qo.max_intervals = 20000;
    Complex total = 0.0;
    const double cuts[] = {-vmax, -knee, 0.0, knee, vmax};
    for (int k = 0; k < 4; ++k)
        if (cuts[k + 1] > cuts[k]) total += numerics::adaptive_quad(outer, cuts[k], cuts[k + 1], 0.25 * opts_.tol, qo).value;
    return total / (4.0 * pi * pi);
}

Complex kappa0_time_average(const TestFunction& psi, const TestFunction& phi, double T, TimeAverageOptions opts) {
    return Kappa0TimeAverage(psi, phi, opts)(T);
}

}  // namespace rieffel::kappa
