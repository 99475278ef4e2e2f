#pragma once

#include "rieffel/kappa/light_cone.hpp"

namespace rieffel::kappa {

struct TimeAverageOptions {
    double table_step = 0.02;    // momentum table spacing
    double support_rel = 1e-10;  // psi_check below this fraction of its max counts as zero
    double tol = 1e-11;          // absolute tolerance of the outer integral
};

/// Truncated group average int_{-T}^{T} da (U(a) psi, phi) of the kappa = 0
/// constraint, computed in momentum space as
///   int dp_x dp_y / (2 pi)^2 psi_check conj(phi_check) 2 sin(T h) / h,
/// h = p_x^2 - p_y^2, in light-cone variables u = p_x - p_y, v = p_x + p_y.
/// With this normalization of the group parameter the T -> infinity limit is
/// kappa0_inner.
///
/// The transforms are tabulated once (then interpolated), so one object can
/// be evaluated at many T.
class Kappa0TimeAverage {
public:
    Kappa0TimeAverage(const TestFunction& psi, const TestFunction& phi, TimeAverageOptions opts = {});

    Complex operator()(double T) const;

    /// psi_check conj(phi_check) at (p_x, p_y) from the tables.
    Complex product(double px, double py) const;

    double support_radius() const { return radius_; }

private:
    Complex inner_u(double omega, double v) const;

    TimeAverageOptions opts_;
    double radius_ = 0.0;
    double origin_ = 0.0;  // momentum of table index 0 on both axes
    CMatrix psi_table_, phi_table_;
};

Complex kappa0_time_average(const TestFunction& psi, const TestFunction& phi, double T, TimeAverageOptions opts = {});

}  // namespace rieffel::kappa
