#include "rieffel/kappa/light_cone.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "rieffel/error.hpp"
#include "rieffel/numerics/quadrature.hpp"

namespace rieffel::kappa {

namespace {

using std::numbers::pi;

// psi_check at the four points (+-p, +-p): out[0] = (p,p), [1] = (p,-p), [2] = (-p,p), [3] = (-p,-p).
std::array<Complex, 4> corner_values(const ComplexGrid2D& g, double p) {
    const double ps[2] = {p, -p};
    const CMatrix t = numerics::momentum_table(g, ps, ps);
    return {t(0, 0), t(0, 1), t(1, 0), t(1, 1)};
}

// 8-point Lagrange weights for position t (in units of the node spacing) with
// nodes at i0 .. i0+7.
void lagrange8(double t, int i0, double w[8]) {
    for (int a = 0; a < 8; ++a) {
        double num = 1.0, den = 1.0;
        for (int b = 0; b < 8; ++b) {
            if (b == a) continue;
            num *= t - (i0 + b);
            den *= static_cast<double>(a - b);
        }
        w[a] = num / den;
    }
}

}  // namespace

TestFunction make_test_function(ComplexGrid2D grid, double tol) {
    grid.validate();
    const numerics::MomentumGrid2D m = numerics::analysis_transform(grid);
    const double peak = m.values.cwiseAbs().maxCoeff();
    const double origin = std::abs(numerics::momentum_value(grid, 0.0, 0.0));
    const double ratio = peak > 0 ? origin / peak : 0.0;
    if (!(ratio < tol)) {
        std::ostringstream os;
        os << "test function: |psi_check(0,0)| / max |psi_check| = " << ratio << " is not below " << tol;
        throw ValidationError(os.str());
    }
    return TestFunction{std::move(grid), ratio};
}

ConeGrid gauss_cone_grid(double p_max, int panels, int order) {
    if (!(p_max > 0) || panels < 1) throw DomainError("gauss_cone_grid: need p_max > 0 and panels >= 1");
    const numerics::GaussRule& r = numerics::gauss_legendre(order);
    const double w = p_max / panels;
    std::vector<double> pos, wts;
    for (int k = 0; k < panels; ++k)
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            pos.push_back((k + 0.5) * w + 0.5 * w * r.nodes[j]);
            wts.push_back(0.5 * w * r.weights[j]);
        }
    ConeGrid g;
    for (std::size_t k = pos.size(); k-- > 0;) {
        g.p.push_back(-pos[k]);
        g.weights.push_back(wts[k]);
    }
    g.p.insert(g.p.end(), pos.begin(), pos.end());
    g.weights.insert(g.weights.end(), wts.begin(), wts.end());
    return g;
}

ConeGrid uniform_cone_grid(double p_max, int n) {
    if (!(p_max > 0) || n < 3) throw DomainError("uniform_cone_grid: need p_max > 0 and n >= 3");
    const double dp = p_max / n;
    ConeGrid g;
    for (int k = -n; k < n; ++k) {
        g.p.push_back((k + 0.5) * dp);
        g.weights.push_back(dp);
    }
    return g;
}

LightConeSection kappa0_vmap(const TestFunction& psi, const ConeGrid& grid, VmapPath path) {
    const ComplexGrid2D& g = psi.grid;
    const Eigen::Index np = static_cast<Eigen::Index>(grid.p.size());
    for (double p : grid.p)
        if (p == 0.0) throw DomainError("kappa0_vmap: cone grids exclude p = 0");
    LightConeSection out;
    out.grid = grid;
    out.plus.resize(np);
    out.minus.resize(np);

    if (path == VmapPath::Direct) {
        CMatrix ex(np, g.nx());
        for (Eigen::Index k = 0; k < np; ++k)
            for (Eigen::Index i = 0; i < g.nx(); ++i) ex(k, i) = std::polar(g.dx, grid.p[k] * g.x(i));
        const CMatrix a = ex * g.values;  // a(k, j) = sum_i e^{i p_k x_i} psi_ij dx
        for (Eigen::Index k = 0; k < np; ++k) {
            Complex sp = 0.0, sm = 0.0;
            for (Eigen::Index j = 0; j < g.ny(); ++j) {
                const Complex e = std::polar(g.dy, grid.p[k] * g.y(j));
                sp += a(k, j) * e;
                sm += a(k, j) * std::conj(e);
            }
            out.plus(k) = sp;
            out.minus(k) = sm;
        }
        return out;
    }

    constexpr int kPad = 4;
    ComplexGrid2D padded = g;
    padded.values = CMatrix::Zero(kPad * g.nx(), kPad * g.ny());
    padded.values.topLeftCorner(g.nx(), g.ny()) = g.values;
    const numerics::MomentumGrid2D m = numerics::analysis_transform(padded);
    auto interp = [&](double px, double py) {
        const double tx = (px - m.px0) / m.dpx, ty = (py - m.py0) / m.dpy;
        const int ix = static_cast<int>(std::floor(tx)) - 3, iy = static_cast<int>(std::floor(ty)) - 3;
        if (ix < 0 || iy < 0 || ix + 7 >= m.nx() || iy + 7 >= m.ny())
            throw DomainError("kappa0_vmap: momentum outside the resolvable band of the grid");
        double wx[8], wy[8];
        lagrange8(tx, ix, wx);
        lagrange8(ty, iy, wy);
        Complex s = 0.0;
        for (int a = 0; a < 8; ++a) {
            Complex row = 0.0;
            for (int b = 0; b < 8; ++b) row += wy[b] * m.values(ix + a, iy + b);
            s += wx[a] * row;
        }
        return s;
    };
    for (Eigen::Index k = 0; k < np; ++k) {
        out.plus(k) = interp(grid.p[k], grid.p[k]);
        out.minus(k) = interp(grid.p[k], -grid.p[k]);
    }
    return out;
}

Complex weighted_inner(const LightConeSection& a, const LightConeSection& b) {
    if (a.grid.p != b.grid.p) throw ValidationError("weighted_inner: sections on different grids");
    std::vector<Complex> terms(a.grid.p.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const Eigen::Index i = static_cast<Eigen::Index>(k);
        terms[k] = a.grid.weights[k] / (4.0 * pi * std::abs(a.grid.p[k])) *
                   (a.plus(i) * std::conj(b.plus(i)) + a.minus(i) * std::conj(b.minus(i)));
    }
    return numerics::pairwise_sum(terms);
}

Complex kappa0_inner(const TestFunction& psi, const TestFunction& phi, double tol) {
    const double nyq = std::min({pi / psi.grid.dx, pi / psi.grid.dy, pi / phi.grid.dx, pi / phi.grid.dy});
    auto f = [&](double p) {
        const auto a = corner_values(psi.grid, p);
        const auto b = corner_values(phi.grid, p);
        Complex s = 0.0;
        for (int k = 0; k < 4; ++k) s += a[k] * std::conj(b[k]);
        return s / (4.0 * pi * p);
    };
    numerics::QuadratureOptions opts;
    opts.max_intervals = 20000;
    return numerics::adaptive_quad(f, 0.0, nyq, tol, opts).value;
}

LightConeSection kappa0_induced_observable(ConeObservable which, const LightConeSection& s) {
    LightConeSection out = s;
    const auto& p = s.grid.p;
    const Eigen::Index n = static_cast<Eigen::Index>(p.size());
    switch (which) {
        case ConeObservable::A1:
            for (Eigen::Index k = 0; k < n; ++k) {
                out.plus(k) *= p[k];
                out.minus(k) *= p[k];
            }
            return out;
        case ConeObservable::A2:
            for (Eigen::Index k = 0; k < n; ++k) {
                out.plus(k) *= p[k];
                out.minus(k) *= -p[k];
            }
            return out;
        case ConeObservable::A3: break;
    }
    if (n < 5) throw DomainError("kappa0_induced_observable(A3): grid too short for the stencil");
    const double dp = p[1] - p[0];
    for (Eigen::Index k = 1; k < n; ++k)
        if (std::abs(p[k] - p[k - 1] - dp) > 1e-9 * dp) throw DomainError("kappa0_induced_observable(A3): grid not uniform");
    const double peak = std::max(s.plus.cwiseAbs().maxCoeff(), s.minus.cwiseAbs().maxCoeff());
    for (Eigen::Index k : {Eigen::Index{0}, Eigen::Index{1}, n - 2, n - 1})
        if (std::max(std::abs(s.plus(k)), std::abs(s.minus(k))) > 1e-12 * peak)
            throw DomainError("kappa0_induced_observable(A3): section not negligible at the grid edge");
    auto deriv = [&](const CVector& f, Eigen::Index k) {
        return (f(k - 2) - 8.0 * f(k - 1) + 8.0 * f(k + 1) - f(k + 2)) / (12.0 * dp);
    };
    const Complex mi(0.0, -1.0);
    out.plus.setZero();
    out.minus.setZero();
    for (Eigen::Index k = 2; k < n - 2; ++k) {
        out.plus(k) = mi * p[k] * deriv(s.plus, k);
        out.minus(k) = -mi * p[k] * deriv(s.minus, k);
    }
    return out;
}

ComplexGrid2D cone_gaussian_fixture(Eigen::Index n, double half_width) {
    return ComplexGrid2D::sample(
        [](double x, double y) { return Complex(0.0, -x * std::exp(-0.5 * (x * x + y * y)) / (2.0 * pi)); }, -half_width,
        half_width, n, -half_width, half_width, n);
}

ComplexGrid2D off_cone_fixture(double p0x, double p0y, double s, Eigen::Index n, double half_width) {
    return ComplexGrid2D::sample(
        [=](double x, double y) {
            return s * s / (2.0 * pi) * std::exp(-0.5 * s * s * (x * x + y * y)) * std::polar(1.0, -(p0x * x + p0y * y));
        },
        -half_width, half_width, n, -half_width, half_width, n);
}

ComplexGrid2D random_cone_test_grid(unsigned seed, Eigen::Index n, double half_width) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> centre(-1.0, 1.0), width(0.6, 1.0), coef(-1.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 3);
    struct Term {
        double a, b, w;
        int kind;
        Complex c;
    };
    std::vector<Term> terms;
    for (int k = 0; k < 3; ++k) {
        Term t{centre(rng), centre(rng), width(rng), kind(rng), {}};
        const double re = coef(rng), im = coef(rng);
        t.c = Complex(re, im);
        terms.push_back(t);
    }
    return ComplexGrid2D::sample(
        [&](double x, double y) {
            Complex v = 0.0;
            for (const auto& t : terms) {
                const double u = x - t.a, w = y - t.b;
                const double g = std::exp(-(u * u + w * w) / (2.0 * t.w * t.w));
                double poly = 0.0;
                switch (t.kind) {
                    case 0: poly = u; break;
                    case 1: poly = w; break;
                    case 2: poly = u * u - t.w * t.w; break;
                    default: poly = u * w; break;
                }
                v += t.c * poly * g;
            }
            return v;
        },
        -half_width, half_width, n, -half_width, half_width, n);
}

}  // namespace rieffel::kappa
