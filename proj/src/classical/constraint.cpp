#include "rieffel/classical/constraint.hpp"

#include <cmath>

#include "rieffel/error.hpp"

namespace rieffel::classical {

void check_kappa(int kappa) {
    if (kappa != 0 && kappa != 1 && kappa != -1) throw DomainError("kappa must be 0, 1 or -1");
}

double constraint_value(int kappa, const PhasePoint& s) {
    check_kappa(kappa);
    return 0.5 * (s.px * s.px + kappa * std::exp(4.0 * s.x) - s.py * s.py);
}

PhasePoint hamiltonian_field(int kappa, const PhasePoint& s) {
    check_kappa(kappa);
    return PhasePoint{s.px, -s.py, -2.0 * kappa * std::exp(4.0 * s.x), 0.0};
}

double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& s, double h) {
    if (!(h > 0)) throw DomainError("poisson_bracket: step must be positive");
    auto d = [&](const Observable& fn, double PhasePoint::*coord) {
        PhasePoint a = s, b = s;
        a.*coord += h;
        b.*coord -= h;
        return (fn(a) - fn(b)) / (2.0 * h);
    };
    return d(f, &PhasePoint::x) * d(g, &PhasePoint::px) - d(f, &PhasePoint::px) * d(g, &PhasePoint::x) +
           d(f, &PhasePoint::y) * d(g, &PhasePoint::py) - d(f, &PhasePoint::py) * d(g, &PhasePoint::y);
}

std::pair<double, double> reduced_coords(int kappa, const PhasePoint& s) {
    if (kappa == 1) {
        if (!(std::abs(s.px) < std::abs(s.py))) throw DomainError("reduced_coords(kappa=1): needs |p_x| < |p_y|");
        return {s.py, s.y - 0.5 * std::atanh(s.px / s.py)};
    }
    if (kappa == -1) {
        if (!(std::abs(s.px) > std::abs(s.py))) throw DomainError("reduced_coords(kappa=-1): needs |p_x| > |p_y|");
        return {s.py, s.y - 0.5 * std::atanh(s.py / s.px)};
    }
    throw DomainError("reduced_coords: kappa must be 1 or -1");
}

}  // namespace rieffel::classical
