#pragma once

#include <vector>

namespace rieffel::kappa {

/// The potential in l = -d^2/dx^2 + V(x).
enum class Potential {
    NegativeExp,  // V = -e^{4x}
    PositiveExp,  // V = +e^{4x}
    Free,         // V = 0
};

const char* to_string(Potential v);

struct DeficiencyResult {
    int n_plus = 0, n_minus = 0;
    double ratio_plus = 0.0, ratio_minus = 0.0;  // tail ratios for l u = +i u and l u = -i u
    bool inconclusive = false;                   // a ratio within 10% of 1
};

/// Integrates l u = +-i u from x_min, starting on the solution exp(r x) with
/// r^2 = -+i and Re r > 0 (the one that decays towards -infinity where V
/// vanishes), RK4 with step dx. The tail ratio
///   R = int_{x_max-1}^{x_max} |u|^2 / int_{x_max-2}^{x_max-1} |u|^2
/// decides square integrability at +infinity (R < 1). The index for each sign
/// is 1 if that solution is L2 there, else 0.
/// Requires x_min <= -8 and x_max >= 3 (DomainError otherwise).
DeficiencyResult deficiency_probe(Potential v, double x_min = -8.0, double x_max = 3.0, double dx = 1e-4);

/// Least-squares fit of sqrt(z) g(z) = a cos z + b sin z, reported as the
/// phase alpha of z^{-1/2} [e^{iz} + e^{-i(z - alpha)}] (alpha = 2 atan2(b, a)
/// mod 2 pi) together with the relative rms residual and amplitude.
struct PhaseFit {
    double alpha = 0.0;
    double residual = 0.0;
    double amplitude = 0.0;
};
PhaseFit fit_phase(const std::vector<double>& z, const std::vector<double>& g);

/// fit_phase applied to (J_{i|p|/2} + J_{-i|p|/2})(z) on n points of
/// [z_min, z_max]. Throws ConvergenceError when the residual is >= 5% and
/// DomainError when z_min < 20.
PhaseFit asymptotic_phase(double p, double z_min = 20.0, double z_max = 200.0, int n = 2000);

/// Slope of log(amplitude) against log(z), amplitudes from phase fits on
/// `windows` consecutive z windows of [z_min, z_max].
double tail_exponent(double p, double z_min = 20.0, double z_max = 200.0, int windows = 8);

}  // namespace rieffel::kappa
