#include "rieffel/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "rieffel/classical/leaves.hpp"
#include "rieffel/compact/induction.hpp"
#include "rieffel/error.hpp"
#include "rieffel/groups/builtin_groups.hpp"
#include "rieffel/groups/group_io.hpp"
#include "rieffel/kappa/bessel_transforms.hpp"
#include "rieffel/kappa/deficiency.hpp"
#include "rieffel/kappa/light_cone.hpp"
#include "rieffel/kappa/time_average.hpp"
#include "rieffel/mackey/module.hpp"
#include "rieffel/numerics/grid_io.hpp"
#include "rieffel/numerics/quadrature.hpp"
#include "rieffel/numerics/special_functions.hpp"

namespace rieffel::harness {

namespace {

using numerics::CMatrix;
using numerics::Complex;
using numerics::CVector;
using std::numbers::pi;

using Check = std::function<void(Report&, const SuiteConfig&)>;
struct NamedCheck {
    std::string name;
    Check run;
};

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

CVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> nd;
    CVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double re = nd(rng), im = nd(rng);
        v(k) = Complex(re, im);
    }
    return v;
}

// ---------------------------------------------------------------- numerics

double ode_residual(bool bessel_sum) {
    constexpr double h = 1e-3;
    const double x_max = bessel_sum ? 50.0 : 30.0;
    double worst = 0.0;
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b) {
            const double nu = 20.0 * a / 19.0;
            const double u = std::log(1e-3) + std::log(x_max / 1e-3) * b / 19.0;
            const double x = std::exp(u);
            auto w = [&](double s) {
                const double xs = std::exp(u + s * h);
                return bessel_sum ? numerics::bessel_imag_sum(nu, xs) : numerics::macdonald_imag(nu, xs);
            };
            const double f0 = w(0), f1 = w(1), fm1 = w(-1), f2 = w(2), fm2 = w(-2);
            const double wuu = (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
            const double wu = (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * h);
            const double c = bessel_sum ? x * x + nu * nu : nu * nu - x * x;
            const double amp = std::sqrt(f0 * f0 + wu * wu / std::max(std::abs(c), 1e-300));
            worst = std::max(worst, std::abs(wuu + c * f0) / (std::max(std::abs(c), 1.0) * amp));
        }
    return worst;
}

void numerics_special(Report& r, const SuiteConfig&) {
    // 20-digit reference values
    r.near("K_0(1)", "K_{i nu}(x) = int exp(-x cosh t) cos(nu t) dt", numerics::macdonald_imag(0, 1), 0.42102443824070833334,
           1e-8);
    r.near("K_0(2)", "K_{i nu}(x) = int exp(-x cosh t) cos(nu t) dt", numerics::macdonald_imag(0, 2), 0.11389387274953343565,
           1e-8);
    r.near("2 J_0(1)", "J_{i nu} + J_{-i nu} at nu = 0", numerics::bessel_imag_sum(0, 1), 1.5303953731159331029, 1e-8);
    r.near("K_{5i}(3)", "K_{i nu}(x)", numerics::macdonald_imag(5, 3), 3.7941674688920078869e-4, 1e-9 * 3.8e-4);
    r.near("K_{20i}(10)", "K_{i nu}(x)", numerics::macdonald_imag(20, 10), -4.9508444413020093005e-15, 1e-9 * 4.96e-15);
    r.near("(J_{i}+J_{-i})(20)", "J_{i nu} + J_{-i nu}", numerics::bessel_imag_sum(1, 20), 0.84524860913523038357, 1e-8);
    r.near("(J_{5i}+J_{-5i})(10)", "J_{i nu} + J_{-i nu}", numerics::bessel_imag_sum(5, 10), -78.111141151503623614,
           1e-8 * 78.2);
}

void numerics_ode(Report& r, const SuiteConfig&) {
    r.below("K_{i nu} Bessel-equation residual, 20x20 lattice", "x^2 w'' + x w' - (x^2 - nu^2) w = 0",
            macdonald_ode_residual(), 1e-6);
    r.below("J_{i nu}+J_{-i nu} Bessel-equation residual, 20x20 lattice", "x^2 w'' + x w' + (x^2 + nu^2) w = 0",
            bessel_sum_ode_residual(), 1e-6);
}

void numerics_fourier(Report& r, const SuiteConfig&) {
    const auto g = numerics::ComplexGrid2D::sample(
        [](double x, double y) { return Complex(std::exp(-0.5 * (x * x + y * y))); }, -12, 12, 256, -12, 12, 256);
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
        const double px = 3.0 * std::cos(0.7 * k) * (k % 4 + 1) / 4.0, py = 3.0 * std::sin(0.7 * k) * (k % 4 + 1) / 4.0;
        const double exact = 2.0 * pi * std::exp(-0.5 * (px * px + py * py));
        worst = std::max(worst, std::abs(numerics::momentum_value(g, px, py) - exact) / exact);
    }
    r.below("Gaussian transform, 16 momenta (relative)", "psi_check(p) = sum psi exp(+i p.x) dx dy", worst, 1e-6);

    std::mt19937_64 rng(11);
    numerics::ComplexGrid2D rg = g;
    for (Eigen::Index j = 0; j < rg.ny(); ++j) rg.values.col(j) = random_vector(rng, rg.nx());
    const auto m = numerics::analysis_transform(rg);
    const double lhs = rg.values.squaredNorm() * rg.dx * rg.dy;
    const double rhs = m.values.squaredNorm() * m.dpx * m.dpy / (4.0 * pi * pi);
    r.below("Parseval (relative)", "sum |psi|^2 dx dy = sum |psi_check|^2 dp / (2 pi)^2", std::abs(lhs - rhs) / lhs, 1e-10);
    const auto back = numerics::synthesis_transform(m);
    r.below("analysis then synthesis (relative)", "round trip", max_abs(back.values - rg.values) / max_abs(rg.values), 1e-10);
}

void numerics_nullspace(Report& r, const SuiteConfig& cfg) {
    std::mt19937_64 rng(5);
    const CVector v = random_vector(rng, 6);
    const numerics::GramForm form(v * v.adjoint());
    const auto split = numerics::nullspace_basis(form, cfg.tol_rank);
    r.near("rank-one Gram: null dimension", "N_0 of v v^*", static_cast<double>(split.null_basis.cols()), 5.0, 0.0);
    r.below("rank-one Gram: |G n|", "G n = 0 on N_0", max_abs(form.matrix() * split.null_basis), 1e-10);
}

void numerics_quadrature(Report& r, const SuiteConfig&) {
    const auto a = numerics::adaptive_quad([](double t) { return Complex(std::exp(-std::cosh(t))); }, 0.0,
                                           std::numeric_limits<double>::infinity(), 1e-12);
    r.near("int_0^inf exp(-cosh t) dt", "= K_0(1)", a.value.real(), numerics::macdonald_imag(0, 1), 1e-10);
    const auto b = numerics::adaptive_quad([](double t) { return Complex(std::exp(-t)); }, 0.0,
                                           std::numeric_limits<double>::infinity(), 1e-12);
    r.near("int_0^inf exp(-x) dx", "= 1", b.value.real(), 1.0, 1e-12);
}

// ---------------------------------------------------------------- compact

std::vector<groups::GroupData> selected_groups(const SuiteConfig& cfg) {
    std::vector<groups::GroupData> out;
    if (cfg.group.empty()) {
        for (const auto& n : groups::builtin_group_names()) out.push_back(groups::builtin_group(n));
        return out;
    }
    const auto& names = groups::builtin_group_names();
    if (std::find(names.begin(), names.end(), cfg.group) != names.end())
        out.push_back(groups::builtin_group(cfg.group));
    else
        out.push_back(groups::read_group_file(cfg.group));
    return out;
}

void compact_forms(Report& r, const SuiteConfig& cfg) {
    for (const auto& d : selected_groups(cfg)) {
        const auto u = compact::regular_rep(d.group);
        for (const auto& irr : d.dual) {
            const auto rho = compact::irrep_rep(d.group, irr);
            const std::string tag = d.group.name() + " (x) " + irr.label;
            const CMatrix p = compact::modified_form(u, rho).form.matrix();
            const CMatrix q = compact::moment_map_form(u, rho).form.matrix();
            r.below(tag + ": averaged form = moment-map form", "(psi(x)v, phi(x)w)_0 = (pi_rho(<phi,psi>) v, w)",
                    max_abs(p - q), 1e-12);
            const CMatrix dirac = compact::dirac_subspace(u, rho, cfg.tol_rank);
            r.below(tag + ": Dirac subspace = range of P_id", "H_D = P_id (H (x) H_rho)",
                    numerics::subspace_distance(dirac, numerics::column_space(p, cfg.tol_rank)), 1e-12);
            const auto space = compact::induce(compact::ModifiedForm{numerics::GramForm(p)}, cfg.tol_rank);
            r.below(tag + ": N_0 = D_0", "N_0 = D_0",
                    numerics::subspace_distance(space.null_basis, compact::constraint_span(u, rho, cfg.tol_rank)), 1e-10);
        }
    }
}

void compact_plancherel(Report& r, const SuiteConfig& cfg) {
    for (const auto& d : selected_groups(cfg)) {
        const auto& g = d.group;
        std::mt19937_64 rng(2024);
        double conv = 0, adj = 0, trip = 0, cstar = 0;
        for (int k = 0; k < 100; ++k) {
            const CVector f1 = random_vector(rng, g.order()), f2 = random_vector(rng, g.order());
            const auto b1 = groups::plancherel(f1, d.dual), b2 = groups::plancherel(f2, d.dual);
            const auto bc = groups::plancherel(groups::convolve(g, f1, f2), d.dual);
            const auto ba = groups::plancherel(groups::adjoint(g, f1), d.dual);
            for (std::size_t c = 0; c < d.dual.size(); ++c) {
                conv = std::max(conv, max_abs(bc[c] - b1[c] * b2[c]));
                adj = std::max(adj, max_abs(ba[c] - b1[c].adjoint()));
            }
            trip = std::max(trip, max_abs(groups::inverse_plancherel(b1, d.dual) - f1));
            const double n = groups::cstar_norm(f1, d.dual);
            const double nn = groups::cstar_norm(groups::convolve(g, groups::adjoint(g, f1), f1), d.dual);
            cstar = std::max(cstar, std::abs(nn - n * n) / (n * n));
        }
        const std::string anchor = "Plancherel *-isomorphism";
        r.below(g.name() + ": convolution -> block product", anchor, conv, 1e-10);
        r.below(g.name() + ": adjoint -> block adjoint", anchor, adj, 1e-10);
        r.below(g.name() + ": inverse round trip", anchor, trip, 1e-10);
        r.below(g.name() + ": ||f^* f|| = ||f||^2 (relative)", "C*-identity", cstar, 1e-10);
    }
}

void compact_moment_map(Report& r, const SuiteConfig& cfg) {
    for (const auto& d : selected_groups(cfg)) {
        const auto& g = d.group;
        const auto u = compact::regular_rep(g);
        std::mt19937_64 rng(77);
        double sym = 0, pos = 0, equi = 0;
        for (int k = 0; k < 50; ++k) {
            const CVector psi = random_vector(rng, u.dim()), phi = random_vector(rng, u.dim());
            const CVector f = random_vector(rng, g.order());
            sym = std::max(sym, max_abs(groups::adjoint(g, compact::moment_map(u, psi, phi)) - compact::moment_map(u, phi, psi)));
            for (const auto& b : groups::plancherel(compact::moment_map(u, psi, psi), d.dual)) {
                Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (b + b.adjoint()));
                pos = std::max(pos, -es.eigenvalues().minCoeff());
            }
            const CVector lhs = compact::moment_map(u, psi, compact::right_rep(u, f) * phi);
            const CVector rhs = groups::convolve(g, compact::moment_map(u, psi, phi), f);
            equi = std::max(equi, max_abs(lhs - rhs));
        }
        r.below(g.name() + ": <psi,phi>^* = <phi,psi>", "moment map property (i)", sym, 1e-12);
        r.below(g.name() + ": Plancherel blocks of <psi,psi> PSD", "moment map property (ii)", std::max(pos, 0.0), 1e-12);
        r.below(g.name() + ": <psi, pi_R(f) phi> = <psi,phi> * f", "moment map property (iii)", equi, 1e-12);
    }
}

void compact_certify(Report& r, const SuiteConfig& cfg) {
    for (const auto& d : selected_groups(cfg)) {
        const auto& g = d.group;
        const auto u = compact::regular_rep(g);
        // right translation by the last element commutes with the left regular action
        const int h = g.order() - 1;
        CMatrix right = CMatrix::Zero(g.order(), g.order());
        for (int k = 0; k < g.order(); ++k) right(g.mul(k, h), k) = 1.0;
        for (const auto& irr : d.dual) {
            const auto rho = compact::irrep_rep(g, irr);
            const auto form = compact::modified_form(u, rho);
            const auto space = compact::induce(form, cfg.tol_rank);
            if (space.dim() == 0) continue;
            const CMatrix a = compact::kron(right, CMatrix::Identity(irr.dim, irr.dim));
            const std::string tag = g.name() + " (x) " + irr.label;
            r.holds(tag + ": right translation certified", "[A, P_id] = 0",
                    compact::certify_observable(a, form.form).certified);
            const double c = compact::rieffel_bound(a, form.form, space);
            const CMatrix pi0 = compact::induced_operator(a, space, form.form);
            r.near(tag + ": C_A = ||pi0(A)||^2", "(A Psi, A Psi)_0 <= C_A (Psi, Psi)_0", c,
                   std::pow(compact::induced_operator_norm(pi0, space), 2), 1e-10);
        }
    }
}

void compact_vector_state(Report& r, const SuiteConfig& cfg) {
    for (const auto& d : selected_groups(cfg)) {
        const auto u = compact::regular_rep(d.group);
        for (const auto& irr : d.dual) {
            const auto rho = compact::irrep_rep(d.group, irr);
            const auto full = compact::induce(compact::modified_form(u, rho), cfg.tol_rank);
            CVector v = CVector::Zero(irr.dim);
            v(0) = 1.0;
            const auto vs = compact::induce(compact::vector_state_form(u, rho, v), cfg.tol_rank);
            const std::string tag = d.group.name() + " (x) " + irr.label;
            r.near(tag + ": vector-state induced dimension", "omega_v induction ~ full induction",
                   static_cast<double>(vs.dim()), static_cast<double>(full.dim()), 0.0);
            if (vs.dim() != full.dim() || full.dim() == 0) continue;
            Eigen::SelfAdjointEigenSolver<CMatrix> a(full.gram), b(vs.gram);
            r.below(tag + ": Gram spectrum, vector state scaled by d_rho", "omega_v induction ~ full induction",
                    (a.eigenvalues() - static_cast<double>(irr.dim) * b.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
        }
        if (d.group.is_abelian()) {
            r.near(d.group.name() + ": GNS induced dimension", "GNS construction",
                   static_cast<double>(compact::induce(compact::gns_form(d.group), cfg.tol_rank).dim()), 1.0, 0.0);
        }
    }
}

void compact_torus(Report& r, const SuiteConfig& cfg) {
    const int l = cfg.truncation_L;
    const auto one = compact::torus_modified_form(compact::make_torus_rep(1, std::max(l, 2), {{-2}, {0}, {0}, {1}}),
                                                  compact::torus_character({0}, std::max(l, 2)));
    r.near("U(1) weights {-2,0,0,1}: induced dimension", "weight-zero subspace",
           static_cast<double>(compact::induce(one, cfg.tol_rank).dim()), 2.0, 0.0);
    const auto reg = compact::torus_modified_form(compact::torus_regular(2, l), compact::torus_character({1, -1}, l));
    r.near("U(1)^2 truncated regular (x) weight (1,-1): induced dimension", "weight bookkeeping",
           static_cast<double>(compact::induce(reg, cfg.tol_rank).dim()), 1.0, 0.0);
}

// ---------------------------------------------------------------- classical

using classical::PhasePoint;

double point_distance(const PhasePoint& a, const PhasePoint& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.px - b.px), std::abs(a.py - b.py)});
}

double point_scale(const PhasePoint& a) { return std::max({1.0, std::abs(a.x), std::abs(a.y), std::abs(a.px), std::abs(a.py)}); }

// On-shell point with |p_x| < |p_y| (kappa = 1) or |p_x| > |p_y| (kappa = -1); any momenta for kappa = 0.
PhasePoint random_on_shell(int kappa, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.2, 2.0), frac(-0.9, 0.9), pos(-2.0, 2.0), sign(-1.0, 1.0);
    PhasePoint s;
    s.y = pos(rng);
    if (kappa == 0) {
        s.x = pos(rng);
        s.py = mag(rng) * (sign(rng) < 0 ? -1 : 1);
        s.px = sign(rng) < 0 ? -s.py : s.py;
        return s;
    }
    const double a = mag(rng) * (sign(rng) < 0 ? -1 : 1), b = frac(rng) * a;
    if (kappa == 1) {
        s.py = a;
        s.px = b;
        s.x = 0.25 * std::log(s.py * s.py - s.px * s.px);
    } else {
        s.px = a;
        s.py = b;
        s.x = 0.25 * std::log(s.px * s.px - s.py * s.py);
    }
    return s;
}

void classical_flows(Report& r, const SuiteConfig&) {
    const PhasePoint s0{0, 0, 1, 1};
    const auto c0 = classical::flow_closed(0, s0, 2.0);
    const auto n0 = classical::flow_numeric(0, s0, 2.0, 1e-3);
    r.below("kappa=0: closed form vs RK4", "(x + p_x t, y - p_y t, p_x, p_y)", point_distance(*c0.endpoint, n0.point), 1e-8);

    const PhasePoint s1{0, 5, 0, 1};
    const auto c1 = classical::flow_closed(1, s1, 1.0);
    const auto n1 = classical::flow_numeric(1, s1, 1.0, 1e-4);
    r.below("kappa=1: closed form vs RK4, t = 1", "p_x = p_y tanh(2 p_y (t0 - t))", point_distance(*c1.endpoint, n1.point),
            1e-8);

    const PhasePoint sm{0, 0, 1, 0};
    const double t_end = classical::flow_closed(-1, sm, 0.0).t_plus - 1e-3;
    const auto cm = classical::flow_closed(-1, sm, t_end);
    const auto nm = classical::flow_numeric(-1, sm, t_end, 1e-4);
    r.below("kappa=-1: closed form vs RK4 up to escape - 1e-3 (relative)", "p_x(t) blows up at the escape time",
            point_distance(*cm.endpoint, nm.point) / point_scale(*cm.endpoint), 1e-8);
}

void classical_escape(Report& r, const SuiteConfig&) {
    const PhasePoint s{0, 0, 1, 0};
    const auto c = classical::flow_closed(-1, s, 0.0);
    r.near("kappa=-1, (0,0,1,0): escape time of the closed form", "t_+ = 2/p_x", c.t_plus, 2.0, 1e-6);
    const auto n = classical::flow_numeric(-1, s, 10.0, 1e-4);
    r.holds("kappa=-1, (0,0,1,0): RK4 blows up", "finite escape time", n.blew_up);
    r.near("kappa=-1, (0,0,1,0): RK4 blow-up time vs closed form", "finite escape time", n.time, c.t_plus, 1e-6);
}

void classical_conservation(Report& r, const SuiteConfig&) {
    for (int kappa : {0, 1, -1}) {
        std::mt19937_64 rng(100 + kappa);
        std::uniform_real_distribution<double> tt(-2.0, 2.0);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const PhasePoint s = random_on_shell(kappa, rng);
            const auto iv = classical::flow_closed(kappa, s, 0.0);
            const double t = std::clamp(tt(rng), std::max(-2.0, iv.t_minus + 0.1), std::min(2.0, iv.t_plus - 0.1));
            const auto n = classical::flow_numeric(kappa, s, t, 5e-4);
            worst = std::max(worst, std::abs(classical::constraint_value(kappa, n.point) - classical::constraint_value(kappa, s)));
        }
        r.below("kappa=" + std::to_string(kappa) + ": |H(flow) - H|, 100 points", "H_kappa conserved", worst, 1e-8);
    }
}

void classical_canonical(Report& r, const SuiteConfig&) {
    const classical::Observable f1 = [](const PhasePoint& s) { return s.py; };
    for (int kappa : {1, -1}) {
        std::mt19937_64 rng(300 + kappa);
        const classical::Observable f2 = [kappa](const PhasePoint& s) { return classical::reduced_coords(kappa, s).second; };
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const PhasePoint s = random_on_shell(kappa, rng);
            worst = std::max(worst, std::abs(classical::poisson_bracket(f2, f1, s) - 1.0));
        }
        r.below("kappa=" + std::to_string(kappa) + ": {f2, f1} - 1, 100 points", "canonical reduced coordinates", worst, 1e-6);
    }
}

void classical_leaves(Report& r, const SuiteConfig&) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> pos(-2.0, 2.0), mom(-2.0, 2.0);
    std::uniform_int_distribution<int> kind(0, 4);
    const std::vector<classical::Observable> obs = {
        [](const PhasePoint& s) { return s.x * s.py + s.y * s.px; },
        [](const PhasePoint& s) { return s.px; },
        [](const PhasePoint& s) { return s.py; },
        [](const PhasePoint& s) { return 0.5 * (s.px * s.px - s.py * s.py); },
    };
    int counts[5] = {0, 0, 0, 0, 0};
    int broken = 0;
    for (int k = 0; k < 1000; ++k) {
        PhasePoint s{pos(rng), pos(rng), 0.0, 0.0};
        const int c = kind(rng);
        if (c < 4) {
            const double a = std::abs(mom(rng)) + 0.1;
            s.px = c % 2 == 0 ? a : -a;
            s.py = c < 2 ? s.px : -s.px;
        }
        const auto label = classical::leaf_classify(s);
        ++counts[static_cast<int>(label)];
        const auto chk = classical::leaf_invariance_check(obs[k % obs.size()], s, 0.5);
        broken += !chk.preserved;
    }
    r.holds("1000 on-shell points: every leaf label occurs", "five symplectic leaves",
            std::all_of(std::begin(counts), std::end(counts), [](int n) { return n > 0; }));
    r.near("1000 on-shell points: labels changed by observable flows", "flows stay on their leaf", broken, 0.0, 0.0);
}

// ---------------------------------------------------------------- kappa

bool kappa_selected(const SuiteConfig& cfg, int kappa) { return !cfg.kappa || *cfg.kappa == kappa; }

void kappa0_checks(Report& r, const SuiteConfig& cfg, const std::string& which) {
    if (!kappa_selected(cfg, 0)) return;
    const kappa::TestFunction psi = kappa::make_test_function(kappa::cone_gaussian_fixture());
    if (which == "inner") {
        r.near("kappa=0: (psi,psi)_0 for the Gaussian-cone fixture", "(psi,phi)_0 = int dp/(4 pi |p|) sum_pm ...",
               kappa::kappa0_inner(psi, psi).real(), 1.0 / (4.0 * pi), 1e-6);
    } else if (which == "time-average") {
        const double exact = 1.0 / (4.0 * pi);
        const kappa::Kappa0TimeAverage avg(psi, psi);
        double prev = std::numeric_limits<double>::infinity(), last = 0.0;
        bool monotone = true;
        for (double t : {25.0, 50.0, 100.0, 200.0}) {
            last = std::abs(avg(t).real() - exact);
            monotone = monotone && last < prev;
            prev = last;
        }
        r.holds("kappa=0: time average error decreases over T = 25..200", "int_{-T}^{T} (U(a) psi, psi) da -> (psi,psi)_0",
                monotone);
        r.below("kappa=0: time average at T = 200 (relative)", "int_{-T}^{T} (U(a) psi, psi) da -> (psi,psi)_0", last / exact,
                1e-2);
    } else if (which == "isometry") {
        double worst = 0.0;
        for (unsigned k = 0; k < 20; ++k) {
            const auto a = kappa::make_test_function(kappa::random_cone_test_grid(2 * k + 1));
            const auto b = kappa::make_test_function(kappa::random_cone_test_grid(2 * k + 2));
            const auto grid = kappa::gauss_cone_grid(0.9 * pi / a.grid.dx, 40);
            const Complex w = kappa::weighted_inner(kappa::kappa0_vmap(a, grid), kappa::kappa0_vmap(b, grid));
            worst = std::max(worst, std::abs(w - kappa::kappa0_inner(a, b)));
        }
        r.below("kappa=0: (V psi, V phi) vs (psi, phi)_0, 20 pairs", "V is isometric", worst, 1e-8);
    } else if (which == "poincare") {
        const auto grid = kappa::uniform_cone_grid(8.0, 800);
        const auto s = kappa::kappa0_vmap(psi, grid);
        using kappa::ConeObservable;
        const auto a1 = kappa::kappa0_induced_observable(ConeObservable::A1, s);
        const auto a3 = kappa::kappa0_induced_observable(ConeObservable::A3, s);
        const auto a31 = kappa::kappa0_induced_observable(ConeObservable::A3, a1);
        const auto a13 = kappa::kappa0_induced_observable(ConeObservable::A1, a3);
        const auto a2 = kappa::kappa0_induced_observable(ConeObservable::A2, s);
        const Complex i(0.0, 1.0);
        const CVector rp = a31.plus - a13.plus + i * a2.plus, rm = a31.minus - a13.minus + i * a2.minus;
        const double scale = std::max(a2.plus.cwiseAbs().maxCoeff(), a2.minus.cwiseAbs().maxCoeff());
        const Eigen::Index n = rp.size();
        // the stencil leaves the two outer samples at each end unset
        const double res = std::max(rp.segment(4, n - 8).cwiseAbs().maxCoeff(), rm.segment(4, n - 8).cwiseAbs().maxCoeff());
        r.below("kappa=0: [A3, A1] + i A2 on V psi (relative)", "Poincare algebra on the cone", res / scale, 1e-5);
    }
}

kappa::SpectralGrid default_spectral_grid() { return kappa::make_spectral_grid(40.0, 8, 16.0, 16, 16); }

void kappa1_checks(Report& r, const SuiteConfig& cfg, const std::string& which) {
    if (!kappa_selected(cfg, 1)) return;
    if (which == "eigen") {
        double worst = 0.0;
        for (double sigma : {0.25, 1.0, 4.0, 9.0, 16.0})
            for (double p : {-2.0, -0.5, 0.5, 1.0, 2.0}) {
                auto f = [&](double x, double y) { return kappa::kappa1_eigfun(sigma, p, x, y); };
                worst = std::max(worst, kappa::eigen_residual(1, f, 2.0 * sigma - 0.5 * p * p, -6.0, 1.5, 41, 0.3));
            }
        r.below("kappa=1: H f_1(sigma,p) - (2 sigma - p^2/2) f_1, 5x5 lattice", "generalized eigenfunctions of H_1", worst,
                1e-5);
    } else if (which == "constraint") {
        double worst = 0.0;
        for (double p : {0.5, 1.0, 2.0}) {
            auto f = [&](double x, double y) { return kappa::kappa1_constraint_eigfun(p, x, y); };
            worst = std::max(worst, kappa::eigen_residual(1, f, 0.0, -6.0, 1.5, 41, 0.3));
        }
        r.below("kappa=1: H f~_1(p), p in {0.5,1,2}", "H_1 f~_1 = 0", worst, 1e-5);
    } else if (which == "parseval" || which == "roundtrip") {
        const auto psi = cfg.kappa1_grid.empty() ? kappa::kappa1_gaussian_fixture(cfg.grid_nx, 256, cfg.grid_xmin, cfg.grid_xmax)
                                                 : numerics::read_grid_csv(cfg.kappa1_grid);
        const auto w = kappa::kappa1_spectral_transform(psi, default_spectral_grid());
        if (which == "parseval") {
            r.near("kappa=1: int dsigma dp/(2 pi) |W psi|^2, ||psi|| = 1", "W_1 is isometric", kappa::spectral_norm2(w), 1.0,
                   0.05);
        } else {
            const auto back = kappa::kappa1_inverse_transform(w, psi);
            r.below("kappa=1: ||W^-1 W psi - psi||", "W_1 inversion", std::sqrt((back.values - psi.values).squaredNorm() * psi.dx * psi.dy),
                    0.05);
        }
    }
}

void kappa_m1_checks(Report& r, const SuiteConfig& cfg, const std::string& which) {
    if (!kappa_selected(cfg, -1)) return;
    if (which == "constraint") {
        double worst = 0.0;
        for (double p : {0.5, 1.0, 2.0}) {
            auto f = [&](double x, double y) { return kappa::kappa_m1_constraint_eigfun(p, x, y); };
            worst = std::max(worst, kappa::eigen_residual(-1, f, 0.0, -6.0, 2.0, 41, 0.3));
        }
        r.below("kappa=-1: H f~_{-1}(p), p in {0.5,1,2}", "H_{-1} f~_{-1} = 0", worst, 1e-5);
    } else if (which == "deficiency") {
        const auto neg = kappa::deficiency_probe(kappa::Potential::NegativeExp);
        r.holds("-d^2/dx^2 - e^{4x}: deficiency indices (1,1)", "deficiency indices (1,1)",
                neg.n_plus == 1 && neg.n_minus == 1 && !neg.inconclusive);
        const auto pos = kappa::deficiency_probe(kappa::Potential::PositiveExp);
        r.holds("-d^2/dx^2 + e^{4x}: deficiency indices (0,0)", "limit point at +infinity",
                pos.n_plus == 0 && pos.n_minus == 0 && !pos.inconclusive);
        const auto free = kappa::deficiency_probe(kappa::Potential::Free);
        r.holds("-d^2/dx^2: deficiency indices (0,0)", "limit point at +infinity",
                free.n_plus == 0 && free.n_minus == 0 && !free.inconclusive);
    } else if (which == "phase") {
        double lo = 1e9, hi = -1e9;
        for (double p : {0.5, 1.0, 2.0}) {
            const auto fit = kappa::asymptotic_phase(p);
            lo = std::min(lo, fit.alpha);
            hi = std::max(hi, fit.alpha);
            r.below("kappa=-1: tail fit residual, p = " + std::to_string(p).substr(0, 3), "z^{-1/2}[e^{iz} + e^{-i(z - alpha)}]",
                    fit.residual, 0.05);
        }
        r.below("kappa=-1: spread of the fitted phase over p in {0.5,1,2}", "alpha independent of p", hi - lo, 0.05);
    } else if (which == "tail") {
        r.near("kappa=-1: tail amplitude exponent, p = 1", "|tail| ~ z^{-1/2}", kappa::tail_exponent(1.0), -0.5, 0.05);
    }
}

// ---------------------------------------------------------------- mackey

struct MackeyFixture {
    std::string label;
    mackey::HomogeneousSpace space;
    groups::DualList dual;
};

std::vector<MackeyFixture> mackey_fixtures() {
    std::vector<MackeyFixture> out;
    for (const auto& name : groups::builtin_group_names()) {
        const auto d = groups::builtin_group(name);
        for (const auto& sub : d.subgroups) {
            mackey::HomogeneousSpace q(d.group, sub.elements);
            auto dual = groups::cyclic_dual(q.subgroup());
            out.push_back({name + "/" + sub.label, std::move(q), std::move(dual)});
        }
    }
    // trivial base: G' = G
    const auto s3 = groups::builtin_group("s3");
    std::vector<int> all(s3.group.order());
    for (int k = 0; k < s3.group.order(); ++k) all[k] = k;
    out.push_back({"s3/s3", mackey::HomogeneousSpace(s3.group, all), s3.dual});
    // |Q| = 4: trivial subgroup of z4
    const auto z4 = groups::builtin_group("z4");
    mackey::HomogeneousSpace q4(z4.group, {z4.group.identity()});
    auto dual4 = groups::cyclic_dual(q4.subgroup());
    out.push_back({"z4/1", std::move(q4), std::move(dual4)});
    return out;
}

void mackey_identification(Report& r, const SuiteConfig&) {
    for (const auto& f : mackey_fixtures())
        for (const auto& rho : f.dual) {
            const auto rep = mackey::rieffel_vs_mackey(f.space, rho);
            const double expected = static_cast<double>(f.space.size()) * rho.dim;
            const std::string tag = f.label + ", rho = " + rho.label;
            r.below(tag + ": equivariant span = Rieffel quotient", "P_id (L2(G') (x) H_rho) = equivariant functions",
                    rep.span_residual, 1e-12);
            r.near(tag + ": equivariant dimension", "dim = |Q| d_rho", static_cast<double>(rep.mackey_dim), expected, 0.0);
            r.near(tag + ": Rieffel quotient dimension", "dim = |Q| d_rho", static_cast<double>(rep.rieffel_dim), expected, 0.0);
            r.near(tag + ": Dirac subspace dimension", "dim = |Q| d_rho", static_cast<double>(rep.dirac_dim), expected, 0.0);
            r.near(tag + ": character count", "dim = |Q| d_rho", rep.character_dim, expected, 1e-10);
            r.below(tag + ": induced inner products agree", "(V Psi, V Phi) = (Psi, Phi)_0", rep.gram_residual, 1e-12);
        }
}

void mackey_point(Report& r, const SuiteConfig& cfg) {
    for (const auto& f : mackey_fixtures())
        for (const auto& rho : f.dual) {
            const auto sections = mackey::point_sections(f.space.size(), rho.dim);
            long total = 0;
            double gram = 0.0;
            bool dims = true;
            for (int q = 0; q < f.space.size(); ++q) {
                const auto s = mackey::induce_at_point(q, sections, cfg.tol_rank);
                total += s.dim();
                dims = dims && s.dim() == rho.dim && s.null_basis.cols() == (f.space.size() - 1) * rho.dim;
                gram = std::max(gram, max_abs(s.gram - CMatrix::Identity(s.dim(), s.dim())));
            }
            const std::string tag = f.label + ", rho = " + rho.label;
            r.holds(tag + ": induced at each point has dimension d_rho", "induction at a point gives H_rho", dims);
            r.below(tag + ": induced inner product = fiber inner product", "induction at a point gives H_rho", gram, 1e-12);
            r.near(tag + ": sum over Q of induced dimensions", "sum_q d_rho = |Q| d_rho", static_cast<double>(total),
                   static_cast<double>(f.space.size()) * rho.dim, 0.0);
        }
}

void mackey_module(Report& r, const SuiteConfig&) {
    std::mt19937_64 rng(4);
    for (const auto& f : mackey_fixtures()) {
        const int n = f.space.size();
        const int d = f.dual.back().dim;
        double sym = 0, pos = 0, equi = 0;
        for (int k = 0; k < 20; ++k) {
            mackey::ModuleSection a{CMatrix(d, n)}, b{CMatrix(d, n)};
            for (int c = 0; c < n; ++c) {
                a.values.col(c) = random_vector(rng, d);
                b.values.col(c) = random_vector(rng, d);
            }
            const CVector fn = random_vector(rng, n);
            sym = std::max(sym, max_abs(mackey::module_inner(a, b) - mackey::module_inner(b, a).conjugate()));
            const CVector aa = mackey::module_inner(a, a);
            pos = std::max({pos, -aa.real().minCoeff(), aa.imag().cwiseAbs().maxCoeff()});
            equi = std::max(equi, max_abs(mackey::module_inner(a, mackey::right_action(fn, b)) -
                                          mackey::module_inner(a, b).cwiseProduct(fn)));
        }
        r.below(f.label + ": <psi,phi> = conj <phi,psi>", "C*-module property (i)", sym, 1e-13);
        r.below(f.label + ": <psi,psi> >= 0 pointwise", "C*-module property (ii)", std::max(pos, 0.0), 1e-13);
        r.below(f.label + ": <psi, phi f> = <psi,phi> f", "C*-module property (iii)", equi, 1e-13);
    }
}

void mackey_u1(Report& r, const SuiteConfig&) {
    std::vector<Complex> c;
    double sum = 0.0;
    for (int k = -50; k <= 50; ++k) {
        c.emplace_back(1.0 / (std::abs(k) + 1));
        sum += 1.0 / ((std::abs(k) + 1.0) * (std::abs(k) + 1.0));
    }
    const auto n = mackey::u1_module_norm_check(c);
    r.near("U(1), psi_n = 1/(|n|+1): module norm", "sup_n |psi_n|", n.sup, 1.0, 1e-15);
    r.near("U(1), psi_n = 1/(|n|+1): L2 norm", "(sum |psi_n|^2)^{1/2}", n.l2, std::sqrt(sum), 1e-12);
    r.holds("U(1): module norm strictly below L2 norm", "C*-module norm weaker than L2", n.sup < n.l2);
}

// ---------------------------------------------------------------- registry

const std::vector<std::pair<std::string, std::vector<NamedCheck>>>& registry() {
    static const std::vector<std::pair<std::string, std::vector<NamedCheck>>> reg = [] {
        std::vector<std::pair<std::string, std::vector<NamedCheck>>> r;
        r.push_back({"numerics",
                     {{"special-values", numerics_special},
                      {"ode", numerics_ode},
                      {"fourier", numerics_fourier},
                      {"nullspace", numerics_nullspace},
                      {"quadrature", numerics_quadrature}}});
        r.push_back({"compact",
                     {{"forms", compact_forms},
                      {"plancherel", compact_plancherel},
                      {"moment-map", compact_moment_map},
                      {"certify", compact_certify},
                      {"vector-state", compact_vector_state},
                      {"torus", compact_torus}}});
        r.push_back({"classical",
                     {{"flows", classical_flows},
                      {"escape", classical_escape},
                      {"conservation", classical_conservation},
                      {"canonical", classical_canonical},
                      {"leaves", classical_leaves}}});
        std::vector<NamedCheck> k;
        for (const char* c : {"inner", "time-average", "isometry", "poincare"})
            k.push_back({c, [c](Report& rep, const SuiteConfig& cfg) { kappa0_checks(rep, cfg, c); }});
        for (const char* c : {"eigen", "parseval", "roundtrip"})
            k.push_back({c, [c](Report& rep, const SuiteConfig& cfg) { kappa1_checks(rep, cfg, c); }});
        k.push_back({"constraint", [](Report& rep, const SuiteConfig& cfg) {
                         kappa1_checks(rep, cfg, "constraint");
                         kappa_m1_checks(rep, cfg, "constraint");
                     }});
        for (const char* c : {"deficiency", "phase", "tail"})
            k.push_back({c, [c](Report& rep, const SuiteConfig& cfg) { kappa_m1_checks(rep, cfg, c); }});
        r.push_back({"kappa", std::move(k)});
        r.push_back({"mackey",
                     {{"identification", mackey_identification},
                      {"point", mackey_point},
                      {"module", mackey_module},
                      {"u1", mackey_u1}}});
        return r;
    }();
    return reg;
}

const std::vector<NamedCheck>& checks_of(const std::string& suite) {
    for (const auto& [name, checks] : registry())
        if (name == suite) return checks;
    throw ValidationError("unknown suite '" + suite + "'");
}

}  // namespace

double macdonald_ode_residual() { return ode_residual(false); }
double bessel_sum_ode_residual() { return ode_residual(true); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& entry : registry()) n.push_back(entry.first);
        return n;
    }();
    return names;
}

const std::vector<std::string>& suite_checks(const std::string& suite) {
    static std::vector<std::pair<std::string, std::vector<std::string>>> cache = [] {
        std::vector<std::pair<std::string, std::vector<std::string>>> c;
        for (const auto& [name, checks] : registry()) {
            std::vector<std::string> n;
            for (const auto& ch : checks) n.push_back(ch.name);
            c.push_back({name, n});
        }
        return c;
    }();
    for (const auto& [name, checks] : cache)
        if (name == suite) return checks;
    throw ValidationError("unknown suite '" + suite + "'");
}

void validate_config(const std::string& suite, const SuiteConfig& cfg) {
    const auto& valid = suite_checks(suite);
    if (!(cfg.tol_rank > 0)) throw ValidationError("--tol-rank must be positive");
    if (cfg.grid_nx < 8) throw ValidationError("--grid-nx must be at least 8");
    if (!(cfg.grid_xmin < cfg.grid_xmax)) throw ValidationError("--grid-xmin must be below --grid-xmax");
    if (cfg.truncation_L < 1) throw ValidationError("--truncation-L must be at least 1");
    if (!cfg.kappa1_grid.empty() && !std::filesystem::exists(cfg.kappa1_grid))
        throw ValidationError("--kappa1-grid '" + cfg.kappa1_grid + "' does not exist");
    if (cfg.kappa && (*cfg.kappa < -1 || *cfg.kappa > 1)) throw ValidationError("--kappa must be 0, 1 or -1");
    if (!cfg.group.empty()) {
        const auto& names = groups::builtin_group_names();
        if (std::find(names.begin(), names.end(), cfg.group) == names.end() && !std::filesystem::exists(cfg.group))
            throw ValidationError("--group '" + cfg.group + "' is neither a built-in group nor an existing file");
    }
    for (const auto& c : cfg.checks)
        if (std::find(valid.begin(), valid.end(), c) == valid.end()) {
            std::ostringstream os;
            os << "unknown check '" << c << "' for suite " << suite << " (valid:";
            for (const auto& v : valid) os << " " << v;
            os << ")";
            throw ValidationError(os.str());
        }
}

Report run_suite(const std::string& suite, const SuiteConfig& cfg) {
    validate_config(suite, cfg);
    Report report(suite);
    for (const auto& check : checks_of(suite)) {
        if (!cfg.checks.empty() && std::find(cfg.checks.begin(), cfg.checks.end(), check.name) == cfg.checks.end()) continue;
        try {
            check.run(report, cfg);
        } catch (const std::exception& e) {
            report.error(check.name, "check did not complete", e.what());
        }
    }
    return report;
}

}  // namespace rieffel::harness
