#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace rieffel::numerics {

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0.0;  // always >= 0
    int evaluations = 0;
};

struct QuadratureOptions {
    int max_intervals = 4000;
    double rel_tol = 0.0;  // extra relative target, on top of the absolute tol
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration over [a, b].
///
/// `b` may be +infinity; the half line is then mapped onto [0, 1) with
/// x = a + t / (1 - t). Subdivision always splits the interval with the
/// largest error estimate (ties broken by position), so the result is
/// reproducible. Throws ConvergenceError once `max_intervals` is reached.
QuadratureResult adaptive_quad(const ComplexIntegrand& f, double a, double b, double tol,
                               const QuadratureOptions& opts = {});

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
const GaussRule& gauss_legendre(int n);

/// Composite Gauss-Legendre over `panels` equal panels of [a, b].
template <class F>
auto composite_gauss(const F& f, double a, double b, int panels, int order = 16) -> decltype(f(a)) {
    const GaussRule& r = gauss_legendre(order);
    const double w = (b - a) / panels;
    decltype(f(a)) total{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * w;
        decltype(f(a)) s{};
        for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * f(mid + 0.5 * w * r.nodes[k]);
        total += 0.5 * w * s;
    }
    return total;
}

/// Abscissae and weights of a fixed-step tanh-sinh rule on [a, b].
/// Nodes whose weight is below 1e-300 are dropped.
struct TanhSinhRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
TanhSinhRule tanh_sinh_rule(double a, double b, double step);

}  // namespace rieffel::numerics
