#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "rieffel/classical/constraint.hpp"

namespace rieffel::classical {

inline constexpr double kOnShellTol = 1e-9;

/// Flow of H_kappa from s for time t. The endpoint is absent when t lies
/// outside the maximal interval (t_minus, t_plus) on which the flow exists.
struct FlowResult {
    std::optional<PhasePoint> endpoint;
    double t_minus = -std::numeric_limits<double>::infinity();
    double t_plus = std::numeric_limits<double>::infinity();
};

/// Closed-form flow. kappa = 0 works anywhere; kappa = +-1 needs
/// |H_kappa(s)| < on_shell_tol and, for kappa = 1, |p_x| < |p_y|, for
/// kappa = -1, |p_x| > |p_y| (DomainError otherwise). x(t) is recovered from
/// H_kappa = 0 as x = log|p_y^2 - p_x^2| / 4.
///
/// For kappa = -1 the flow leaves phase space in finite time: p_x(t) =
/// p_y coth(2 p_y (t0 - t)) with t0 = artanh(p_y/p_x) / (2 p_y), and for
/// p_y = 0, p_x(t) = p_x / (1 - 2 p_x t) with escape time 1 / (2 p_x).
FlowResult flow_closed(int kappa, const PhasePoint& s, double t, double on_shell_tol = kOnShellTol);

/// Classical RK4 for Hamilton's equations of H_kappa.
struct NumericFlow {
    PhasePoint point;
    double time = 0.0;  // time actually reached
    bool blew_up = false;
    long steps = 0;
};

/// Integrates to time t (either sign) with nominal step dt. Near a blow-up
/// the step shrinks with the local time scale 1/(|p_x| + 2 e^{2x}); blow-up
/// is reported once |p_x| or e^{4x} exceeds `blowup`, with `time` set to the
/// time reached.
NumericFlow flow_numeric(int kappa, const PhasePoint& s, double t, double dt, double blowup = 1e12);

/// Flow of an arbitrary observable's Hamiltonian vector field (gradients by
/// central differences with step h), RK4 with step dt.
PhasePoint observable_flow(const Observable& f, const PhasePoint& s, double t, double dt = 1e-3, double h = 1e-6);

/// Samples of flow_closed on n+1 equally spaced times in [t0, t1]; times
/// outside the defined interval are skipped.
struct TrajectorySample {
    double t;
    PhasePoint s;
};
std::vector<TrajectorySample> sample_trajectory(int kappa, const PhasePoint& s, double t0, double t1, int n);

/// CSV `t,x,y,px,py,H`.
void write_trajectory_csv(std::ostream& os, int kappa, const std::vector<TrajectorySample>& samples);

}  // namespace rieffel::classical
