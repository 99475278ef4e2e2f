#include "rieffel/numerics/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "rieffel/error.hpp"
#include "rieffel/numerics/linalg.hpp"
#include "rieffel/numerics/quadrature.hpp"

namespace rieffel::numerics {

namespace {

using std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

struct SeriesValue {
    Complex sum;
    Complex theta_sum;  // x d/dx of the series
    double abs_sum;     // sum of term magnitudes, for cancellation estimates
};

// sum_k s^k (x/2)^{2k + i nu} / (k! Gamma(k + 1 + i nu)), s = +1 (I) or -1 (J).
SeriesValue imag_order_series(double nu, double x, double sign) {
    const Complex inu(0.0, nu);
    const double q = 0.25 * x * x;
    Complex term = std::exp(inu * std::log(0.5 * x) - log_gamma(1.0 + inu));
    SeriesValue out{term, inu * term, std::abs(term)};
    for (int k = 1; k < 2000; ++k) {
        term *= sign * q / (static_cast<double>(k) * (static_cast<double>(k) + inu));
        out.sum += term;
        out.theta_sum += (2.0 * k + inu) * term;
        const double a = std::abs(term);
        out.abs_sum += a;
        if (k > q && a < 1e-18 * out.abs_sum) break;
    }
    return out;
}

struct QuadValue {
    double value;
    double scale;  // int exp(-x cosh t) dt over the same nodes
};

QuadValue macdonald_quadrature(double nu, double x) {
    const double t_max = std::acosh(std::max(40.0 / x, 40.0));
    const int panels = std::max(1, static_cast<int>(std::ceil(t_max * (nu + std::sqrt(x) + 1.0) / 1.5)));
    const double width = t_max / panels;
    // The rule is shifted per panel; tanh-sinh weights only depend on the width.
    const TanhSinhRule rule = tanh_sinh_rule(0.0, width, 1.0 / 8.0);
    std::vector<double> vals, mags;
    vals.reserve(rule.nodes.size() * panels);
    mags.reserve(rule.nodes.size() * panels);
    for (int p = 0; p < panels; ++p) {
        const double base = p * width;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double t = base + rule.nodes[k];
            const double e = rule.weights[k] * std::exp(-x * std::cosh(t));
            vals.push_back(e * std::cos(nu * t));
            mags.push_back(e);
        }
    }
    return {pairwise_sum(vals), pairwise_sum(mags)};
}

// Hankel expansion of (J_{i nu} + J_{-i nu})(x) for large x.
double bessel_imag_sum_asymptotic(double nu, double x) {
    const double four_mu2 = -4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double a = 1.0;  // a_k / x^k
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= (four_mu2 - odd * odd) / (k * 8.0 * x);
        const double mag = std::abs(a);
        if (mag > last) break;  // asymptotic series: stop at the smallest term
        last = mag;
        const double signed_term = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * a;
        if (k % 2 == 0) p += signed_term;
        else q += signed_term;
        if (mag < 1e-17) break;
    }
    const double chi = x - 0.25 * pi;
    return 2.0 * std::cosh(0.5 * pi * nu) * std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

Complex log_gamma(Complex z) {
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    Complex acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double macdonald_imag_series(double nu, double x) {
    if (!(x > 0)) throw DomainError("macdonald_imag_series: x must be positive");
    if (!(nu > 0)) throw DomainError("macdonald_imag_series: nu must be positive");
    const SeriesValue s = imag_order_series(nu, x, +1.0);
    return -pi * s.sum.imag() / std::sinh(pi * nu);
}

double macdonald_imag(double nu, double x) {
    if (!(x > 0)) throw DomainError("macdonald_imag: x must be positive");
    if (!(nu >= 0) || !std::isfinite(nu)) throw DomainError("macdonald_imag: nu must be non-negative");
    if (x < 1e-6) throw DomainError("macdonald_imag: x below 1e-6 (overflow guard); rescale before calling");

    if (nu >= 0.5 && x <= 4.0 * nu + 10.0) {
        const SeriesValue s = imag_order_series(nu, x, +1.0);
        const double series_loss = s.abs_sum / std::max(std::abs(s.sum.imag()), 1e-300);
        if (series_loss < 1e3) return -pi * s.sum.imag() / std::sinh(pi * nu);
        const QuadValue qv = macdonald_quadrature(nu, x);
        const double quad_loss = qv.scale / std::max(std::abs(qv.value), 1e-300);
        return quad_loss <= series_loss ? qv.value : -pi * s.sum.imag() / std::sinh(pi * nu);
    }
    return macdonald_quadrature(nu, x).value;
}

double bessel_imag_sum(double nu, double x) {
    if (!(x > 0)) throw DomainError("bessel_imag_sum: x must be positive");
    if (!(nu >= 0) || !std::isfinite(nu)) throw DomainError("bessel_imag_sum: nu must be non-negative");

    constexpr double kSeriesEdge = 2.0;
    if (x <= kSeriesEdge) return 2.0 * imag_order_series(nu, x, -1.0).sum.real();
    if (x > 30.0 + nu * nu) return bessel_imag_sum_asymptotic(nu, x);

    // w_uu = -(e^{2u} + nu^2) w in u = ln x; both solutions oscillate, so
    // forward integration neither amplifies nor damps errors.
    const SeriesValue start = imag_order_series(nu, kSeriesEdge, -1.0);
    using State = std::array<double, 2>;
    State state{2.0 * start.sum.real(), 2.0 * start.theta_sum.real()};
    const double nu2 = nu * nu;
    auto rhs = [nu2](const State& s, State& ds, double u) {
        ds[0] = s[1];
        ds[1] = -(std::exp(2.0 * u) + nu2) * s[0];
    };
    const double u0 = std::log(kSeriesEdge);
    const double u1 = std::log(x);
    const double omega = std::sqrt(x * x + nu2);
    const int steps = std::max(4, static_cast<int>(std::ceil((u1 - u0) * omega / 0.08)));
    const double h = (u1 - u0) / steps;
    boost::numeric::odeint::runge_kutta_fehlberg78<State> stepper;
    for (int i = 0; i < steps; ++i) stepper.do_step(rhs, state, u0 + i * h, h);
    return state[0];
}

}  // namespace rieffel::numerics
