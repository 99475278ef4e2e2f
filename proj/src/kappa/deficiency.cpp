#include "rieffel/kappa/deficiency.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include "rieffel/error.hpp"
#include "rieffel/numerics/special_functions.hpp"

namespace rieffel::kappa {

namespace {

using Complex = std::complex<double>;
using State = std::array<Complex, 2>;  // (u, u')

double potential(Potential v, double x) {
    switch (v) {
        case Potential::NegativeExp: return -std::exp(4.0 * x);
        case Potential::PositiveExp: return std::exp(4.0 * x);
        case Potential::Free: return 0.0;
    }
    return 0.0;
}

// Tail ratio for -u'' + V u = lambda u with lambda = +-i.
double tail_ratio(Potential v, Complex lambda, double x_min, double x_max, double dx) {
    const Complex r = std::sqrt(-lambda);  // principal root, Re r > 0
    State u{std::exp(r * x_min), r * std::exp(r * x_min)};
    auto rhs = [&](const State& s, State& ds, double x) {
        ds[0] = s[1];
        ds[1] = (potential(v, x) - lambda) * s[0];
    };
    boost::numeric::odeint::runge_kutta4<State, double, State, double> stepper;
    const long n = std::lround((x_max - x_min) / dx);
    const double h = (x_max - x_min) / static_cast<double>(n);
    double near = 0.0, far = 0.0;
    for (long k = 0; k < n; ++k) {
        const double x = x_min + static_cast<double>(k) * h;
        const double w = std::norm(u[0]) * h;
        if (x >= x_max - 1.0) far += w;
        else if (x >= x_max - 2.0) near += w;
        stepper.do_step(rhs, u, x, h);
    }
    return far / near;
}

}  // namespace

const char* to_string(Potential v) {
    switch (v) {
        case Potential::NegativeExp: return "-exp(4x)";
        case Potential::PositiveExp: return "+exp(4x)";
        case Potential::Free: return "0";
    }
    return "?";
}

DeficiencyResult deficiency_probe(Potential v, double x_min, double x_max, double dx) {
    if (x_min > -8.0 || x_max < 3.0) throw DomainError("deficiency_probe: need x_min <= -8 and x_max >= 3");
    if (!(dx > 0) || dx > 1e-2) throw DomainError("deficiency_probe: dx must be in (0, 1e-2]");
    DeficiencyResult out;
    out.ratio_plus = tail_ratio(v, Complex(0.0, 1.0), x_min, x_max, dx);
    out.ratio_minus = tail_ratio(v, Complex(0.0, -1.0), x_min, x_max, dx);
    out.n_plus = out.ratio_plus < 1.0 ? 1 : 0;
    out.n_minus = out.ratio_minus < 1.0 ? 1 : 0;
    out.inconclusive = std::abs(out.ratio_plus - 1.0) < 0.1 || std::abs(out.ratio_minus - 1.0) < 0.1;
    return out;
}

PhaseFit fit_phase(const std::vector<double>& z, const std::vector<double>& g) {
    if (z.size() != g.size() || z.size() < 3) throw DomainError("fit_phase: need at least 3 matching samples");
    const Eigen::Index n = static_cast<Eigen::Index>(z.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd b(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        a(k, 0) = std::cos(z[k]);
        a(k, 1) = std::sin(z[k]);
        b(k) = std::sqrt(z[k]) * g[k];
    }
    const Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
    PhaseFit fit;
    fit.amplitude = c.norm();
    fit.residual = b.norm() > 0 ? (a * c - b).norm() / b.norm() : 0.0;
    fit.alpha = std::fmod(2.0 * std::atan2(c(1), c(0)) + 4.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    return fit;
}

PhaseFit asymptotic_phase(double p, double z_min, double z_max, int n) {
    if (z_min < 20.0) throw DomainError("asymptotic_phase: z_min must be at least 20");
    if (!(z_max > z_min) || n < 3) throw DomainError("asymptotic_phase: bad sampling range");
    const double nu = 0.5 * std::abs(p);
    std::vector<double> z(n), g(n);
    for (int k = 0; k < n; ++k) {
        z[k] = z_min + (z_max - z_min) * k / (n - 1);
        g[k] = numerics::bessel_imag_sum(nu, z[k]);
    }
    const PhaseFit fit = fit_phase(z, g);
    if (!(fit.residual < 0.05)) {
        std::ostringstream os;
        os << "asymptotic_phase: fit residual " << fit.residual << " at p = " << p << " is not below 5%";
        throw ConvergenceError(os.str());
    }
    return fit;
}

double tail_exponent(double p, double z_min, double z_max, int windows) {
    if (!(z_min > 0) || !(z_max > z_min) || windows < 2) throw DomainError("tail_exponent: bad window layout");
    const double nu = 0.5 * std::abs(p);
    constexpr int kPerWindow = 400;
    const double ratio = std::pow(z_max / z_min, 1.0 / windows);
    Eigen::MatrixXd a(windows, 2);
    Eigen::VectorXd b(windows);
    for (int w = 0; w < windows; ++w) {
        const double lo = z_min * std::pow(ratio, w), hi = lo * ratio;
        std::vector<double> z(kPerWindow), g(kPerWindow);
        for (int k = 0; k < kPerWindow; ++k) {
            z[k] = lo + (hi - lo) * k / (kPerWindow - 1);
            g[k] = numerics::bessel_imag_sum(nu, z[k]) / std::sqrt(z[k]);  // fit_phase multiplies by sqrt(z)
        }
        a(w, 0) = 1.0;
        a(w, 1) = std::log(std::sqrt(lo * hi));
        b(w) = std::log(fit_phase(z, g).amplitude);
    }
    return a.colPivHouseholderQr().solve(b)(1);
}

}  // namespace rieffel::kappa
