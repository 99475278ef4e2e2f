#include "rieffel/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::numerics {

namespace {

// Kronrod 15-point abscissae (positive half) and weights, Gauss 7-point weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    std::complex<double> value;
    double error;
};

struct SegmentOrder {
    bool operator()(const Segment& a, const Segment& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo;
    }
};

template <class G>
Segment gk15(const G& g, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const std::complex<double> fc = g(c);
    std::complex<double> k = kWgk[7] * fc;
    std::complex<double> gs = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const std::complex<double> s = g(c - dx) + g(c + dx);
        k += kWgk[j] * s;
        if (j % 2 == 1) gs += kWg[j / 2] * s;
    }
    Segment seg{lo, hi, k * h, std::abs((k - gs) * h)};
    return seg;
}

}  // namespace

QuadratureResult adaptive_quad(const ComplexIntegrand& f, double a, double b, double tol,
                               const QuadratureOptions& opts) {
    if (!(tol > 0)) throw DomainError("adaptive_quad: tol must be positive");
    if (!std::isfinite(a)) throw DomainError("adaptive_quad: lower limit must be finite");
    if (!(b >= a)) throw DomainError("adaptive_quad: requires a <= b");

    QuadratureResult out;
    if (a == b) return out;

    const bool infinite = std::isinf(b);
    std::function<std::complex<double>(double)> g;
    double lo = a, hi = b;
    if (infinite) {
        lo = 0.0;
        hi = 1.0;
        g = [&](double t) {
            const double s = 1.0 - t;
            ++out.evaluations;
            return f(a + t / s) / (s * s);
        };
    } else {
        g = [&](double x) {
            ++out.evaluations;
            return f(x);
        };
    }

    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> heap;
    Segment first = gk15(g, lo, hi);
    heap.push(first);
    std::complex<double> running = first.value;
    double running_err = first.error;
    int intervals = 1;

    auto finish = [&]() {
        // Final totals are summed in position order so the result does not
        // depend on the history of the running sums.
        auto copy = heap;
        std::vector<Segment> all;
        all.reserve(copy.size());
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
        std::complex<double> total{};
        double err = 0.0;
        for (const auto& s : all) {
            total += s.value;
            err += s.error;
        }
        out.value = total;
        out.error_estimate = err;
    };

    for (;;) {
        const double target = std::max(tol, opts.rel_tol * std::abs(running));
        if (running_err <= target) {
            finish();
            if (out.error_estimate <= std::max(tol, opts.rel_tol * std::abs(out.value))) return out;
        }
        if (intervals >= opts.max_intervals) {
            std::ostringstream os;
            os << "adaptive_quad: no convergence after " << intervals << " intervals (error estimate "
               << running_err << ", target " << target << ")";
            throw ConvergenceError(os.str());
        }
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        Segment left = gk15(g, worst.lo, mid);
        Segment right = gk15(g, mid, worst.hi);
        running += left.value + right.value - worst.value;
        running_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");

    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged root.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

TanhSinhRule tanh_sinh_rule(double a, double b, double step) {
    if (!(step > 0)) throw DomainError("tanh_sinh_rule: step must be positive");
    TanhSinhRule r;
    const double half = 0.5 * (b - a);
    const double halfpi = 0.5 * std::numbers::pi;
    for (int k = 0;; ++k) {
        const double t = k * step;
        const double u = halfpi * std::sinh(t);
        // Distance of the node from the nearer endpoint, computed without cancellation.
        const double e = std::exp(-2.0 * u);
        const double dist = half * 2.0 * e / (1.0 + e);
        const double ch = std::cosh(u);
        const double w = step * half * halfpi * std::cosh(t) / (ch * ch);
        if (w < 1e-300 || dist <= 0.0) break;
        if (k == 0) {
            r.nodes.push_back(a + half);
            r.weights.push_back(w);
        } else {
            r.nodes.push_back(a + dist);
            r.weights.push_back(w);
            r.nodes.push_back(b - dist);
            r.weights.push_back(w);
        }
        if (k > 10000) break;
    }
    return r;
}

}  // namespace rieffel::numerics
