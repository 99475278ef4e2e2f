#include "rieffel/classical/flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::classical {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double log_cosh(double u) {
    const double a = std::abs(u);
    return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

double log_abs_sinh(double u) {
    const double a = std::abs(u);
    return a + std::log1p(-std::exp(-2.0 * a)) - kLn2;
}

PhasePoint axpy(const PhasePoint& s, double h, const PhasePoint& k) {
    return {s.x + h * k.x, s.y + h * k.y, s.px + h * k.px, s.py + h * k.py};
}

template <class Field>
PhasePoint rk4_step(const Field& f, const PhasePoint& s, double h) {
    const PhasePoint k1 = f(s);
    const PhasePoint k2 = f(axpy(s, 0.5 * h, k1));
    const PhasePoint k3 = f(axpy(s, 0.5 * h, k2));
    const PhasePoint k4 = f(axpy(s, h, k3));
    return {s.x + h / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x), s.y + h / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
            s.px + h / 6.0 * (k1.px + 2 * k2.px + 2 * k3.px + k4.px),
            s.py + h / 6.0 * (k1.py + 2 * k2.py + 2 * k3.py + k4.py)};
}

void require_on_shell(int kappa, const PhasePoint& s, double tol) {
    const double h = constraint_value(kappa, s);
    if (!(std::abs(h) < tol)) {
        std::ostringstream os;
        os << "flow_closed(kappa=" << kappa << "): point is off the constraint surface (H = " << h << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

FlowResult flow_closed(int kappa, const PhasePoint& s, double t, double on_shell_tol) {
    check_kappa(kappa);
    FlowResult r;
    if (kappa == 0) {
        r.endpoint = PhasePoint{s.x + s.px * t, s.y - s.py * t, s.px, s.py};
        return r;
    }
    require_on_shell(kappa, s, on_shell_tol);

    if (kappa == 1) {
        if (!(std::abs(s.px) < std::abs(s.py))) throw DomainError("flow_closed(kappa=1): needs |p_x| < |p_y|");
        const double t0 = std::atanh(s.px / s.py) / (2.0 * s.py);
        const double u0 = 2.0 * s.py * t0;
        const double u = 2.0 * s.py * (t0 - t);
        r.endpoint = PhasePoint{s.x + 0.5 * (log_cosh(u0) - log_cosh(u)), s.y - s.py * t, s.py * std::tanh(u), s.py};
        return r;
    }

    if (!(std::abs(s.px) > std::abs(s.py))) throw DomainError("flow_closed(kappa=-1): needs |p_x| > |p_y|");
    if (s.py == 0.0) {
        const double escape = 1.0 / (2.0 * s.px);
        if (s.px > 0) r.t_plus = escape;
        else r.t_minus = escape;
        if (t > r.t_minus && t < r.t_plus) {
            const double denom = 1.0 - 2.0 * s.px * t;
            r.endpoint = PhasePoint{s.x - 0.5 * std::log(std::abs(denom)), s.y, s.px / denom, 0.0};
        }
        return r;
    }
    const double t0 = std::atanh(s.py / s.px) / (2.0 * s.py);
    if (s.px > 0) r.t_plus = t0;
    else r.t_minus = t0;
    if (t > r.t_minus && t < r.t_plus) {
        const double u0 = 2.0 * s.py * t0;
        const double u = 2.0 * s.py * (t0 - t);
        r.endpoint = PhasePoint{s.x + 0.5 * (log_abs_sinh(u0) - log_abs_sinh(u)), s.y - s.py * t, s.py / std::tanh(u), s.py};
    }
    return r;
}

NumericFlow flow_numeric(int kappa, const PhasePoint& s, double t, double dt, double blowup) {
    check_kappa(kappa);
    if (!(dt > 0)) throw DomainError("flow_numeric: dt must be positive");
    auto field = [kappa](const PhasePoint& p) { return hamiltonian_field(kappa, p); };
    const double dir = t >= 0 ? 1.0 : -1.0;
    NumericFlow out;
    out.point = s;
    constexpr long kMaxSteps = 200'000'000;
    while (dir * (t - out.time) > 0) {
        double h = std::min(dt, dir * (t - out.time));
        if (kappa != 0) h = std::min(h, 0.02 / (std::abs(out.point.px) + 2.0 * std::exp(2.0 * out.point.x)));
        const double remaining = dir * (t - out.time);
        out.point = rk4_step(field, out.point, dir * h);
        // Land exactly on t when this was the final step.
        out.time = h == remaining ? t : out.time + dir * h;
        ++out.steps;
        if (std::abs(out.point.px) > blowup || std::exp(4.0 * out.point.x) > blowup || !std::isfinite(out.point.px)) {
            out.blew_up = true;
            return out;
        }
        if (out.steps > kMaxSteps) throw ConvergenceError("flow_numeric: step limit exceeded");
    }
    return out;
}

PhasePoint observable_flow(const Observable& f, const PhasePoint& s, double t, double dt, double h) {
    auto field = [&](const PhasePoint& p) {
        auto d = [&](double PhasePoint::*c) {
            PhasePoint a = p, b = p;
            a.*c += h;
            b.*c -= h;
            return (f(a) - f(b)) / (2.0 * h);
        };
        return PhasePoint{d(&PhasePoint::px), d(&PhasePoint::py), -d(&PhasePoint::x), -d(&PhasePoint::y)};
    };
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(t) / dt)));
    const double step = t / n;
    PhasePoint p = s;
    for (int k = 0; k < n; ++k) p = rk4_step(field, p, step);
    return p;
}

std::vector<TrajectorySample> sample_trajectory(int kappa, const PhasePoint& s, double t0, double t1, int n) {
    if (n < 1) throw DomainError("sample_trajectory: need at least one interval");
    std::vector<TrajectorySample> out;
    for (int k = 0; k <= n; ++k) {
        const double t = t0 + (t1 - t0) * k / n;
        const FlowResult r = flow_closed(kappa, s, t);
        if (r.endpoint) out.push_back({t, *r.endpoint});
    }
    return out;
}

void write_trajectory_csv(std::ostream& os, int kappa, const std::vector<TrajectorySample>& samples) {
    os << "t,x,y,px,py,H\n";
    char buf[256];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t, s.s.x, s.s.y, s.s.px, s.s.py,
                      constraint_value(kappa, s.s));
        os << buf;
    }
}

}  // namespace rieffel::classical
