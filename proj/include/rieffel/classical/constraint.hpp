#pragma once

#include <functional>
#include <utility>

namespace rieffel::classical {

/// Canonical coordinates on T^*R^2.
struct PhasePoint {
    double x = 0.0, y = 0.0, px = 0.0, py = 0.0;
};

using Observable = std::function<double(const PhasePoint&)>;

/// Throws DomainError unless kappa is 0, 1 or -1.
void check_kappa(int kappa);

/// H_kappa = (p_x^2 + kappa e^{4x} - p_y^2) / 2.
double constraint_value(int kappa, const PhasePoint& s);

/// Hamiltonian vector field of H_kappa: (dx, dy, dpx, dpy)/dt.
PhasePoint hamiltonian_field(int kappa, const PhasePoint& s);

/// {f, g} = sum_q (df/dq dg/dp - df/dp dg/dq) by central differences with step h.
double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& s, double h = 1e-4);

/// kappa = 1: (p_y, y - artanh(p_x/p_y)/2), needs |p_x| < |p_y|.
/// kappa = -1: (p_y, y - artanh(p_y/p_x)/2), needs |p_x| > |p_y|.
/// Throws DomainError otherwise (the point is off the relevant cone region).
std::pair<double, double> reduced_coords(int kappa, const PhasePoint& s);

}  // namespace rieffel::classical
