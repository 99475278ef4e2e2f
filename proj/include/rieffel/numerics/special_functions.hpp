#pragma once

#include <complex>

namespace rieffel::numerics {

/// log Gamma(z) for complex z (Lanczos, g = 7), principal branch continued
/// along the real axis so that arg is continuous for Im z != 0.
std::complex<double> log_gamma(std::complex<double> z);

/// Macdonald function of imaginary order, K_{i nu}(x) = int_0^inf exp(-x cosh t) cos(nu t) dt.
///
/// Uses composite tanh-sinh quadrature of that integral, truncated at
/// t_max = arcosh(max(40/x, 40)), unless the ascending series
/// K_{i nu}(x) = -pi Im I_{i nu}(x) / sinh(pi nu) loses fewer digits to
/// cancellation (large nu, moderate x). Throws DomainError for x <= 0 or
/// nu < 0, and for x < 1e-6 (the caller must rescale there).
double macdonald_imag(double nu, double x);

/// Ascending series for K_{i nu}(x), usable for arbitrarily small x when
/// nu > 0. Not accurate for x much beyond a few units.
double macdonald_imag_series(double nu, double x);

/// (J_{i nu} + J_{-i nu})(x), which is real for real nu and x > 0.
///
/// Ascending series (complex log-gamma) for x <= 2, the Hankel expansion for
/// x > 30 + nu^2, and in between the Bessel equation integrated in u = ln x
/// from x = 2 with a fixed-step eighth-order Runge-Kutta scheme.
double bessel_imag_sum(double nu, double x);

}  // namespace rieffel::numerics
