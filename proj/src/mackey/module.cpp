#include "rieffel/mackey/module.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rieffel/error.hpp"

namespace rieffel::mackey {

namespace {

void check_rho(const HomogeneousSpace& q, const Irrep& rho) { groups::validate_irrep(q.subgroup(), rho); }

void check_section(const ModuleSection& s, Eigen::Index dim, Eigen::Index points, const char* where) {
    if (s.values.rows() != dim || s.values.cols() != points)
        throw ValidationError(std::string(where) + ": section shape does not match the bundle");
}

}  // namespace

CMatrix induce_mackey(const HomogeneousSpace& q, const Irrep& rho) {
    check_rho(q, rho);
    const int d = rho.dim, m = q.subgroup().order();
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    CMatrix b = CMatrix::Zero(static_cast<Eigen::Index>(q.ambient().order()) * d, static_cast<Eigen::Index>(q.size()) * d);
    for (int c = 0; c < q.size(); ++c)
        for (int k = 0; k < m; ++k) {
            const int p = q.ambient().mul(q.coset_reps()[c], q.ambient_index(k));
            b.block(p * d, c * d, d, d) = rho.matrices[k].adjoint() * scale;
        }
    return b;
}

double equivariance_residual(const HomogeneousSpace& q, const Irrep& rho, const CVector& psi) {
    const int d = rho.dim;
    if (psi.size() != static_cast<Eigen::Index>(q.ambient().order()) * d)
        throw ValidationError("equivariance_residual: vector length != |G'| d_rho");
    double worst = 0.0;
    for (int p = 0; p < q.ambient().order(); ++p)
        for (int k = 0; k < q.subgroup().order(); ++k) {
            const int pg = q.ambient().mul(p, q.ambient_index(k));
            const CVector diff = psi.segment(pg * d, d) - rho.matrices[k].adjoint() * psi.segment(p * d, d);
            worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
    return worst;
}

compact::UnitaryRep right_translation(const HomogeneousSpace& q) {
    const int n = q.ambient().order();
    std::vector<CMatrix> mats;
    for (int k = 0; k < q.subgroup().order(); ++k) {
        CMatrix u = CMatrix::Zero(n, n);
        for (int p = 0; p < n; ++p) u(p, q.ambient().mul(p, q.ambient_index(k))) = 1.0;
        mats.push_back(std::move(u));
    }
    return compact::make_rep(q.subgroup(), std::move(mats));
}

MackeyReport rieffel_vs_mackey(const HomogeneousSpace& q, const Irrep& rho) {
    check_rho(q, rho);
    const compact::UnitaryRep u = right_translation(q);
    const compact::UnitaryRep r = compact::irrep_rep(q.subgroup(), rho);
    const compact::ModifiedForm form = compact::modified_form(u, r);
    const compact::InducedSpace space = compact::induce(form);
    const CMatrix b = induce_mackey(q, rho);

    MackeyReport rep;
    rep.mackey_dim = b.cols();
    rep.rieffel_dim = space.dim();
    rep.dirac_dim = compact::dirac_subspace(u, r).cols();
    rep.projector_trace = form.form.matrix().trace().real();
    rep.span_residual = numerics::subspace_distance(b, space.basis);
    const CMatrix gram = b.adjoint() * form.form.matrix() * b - CMatrix::Identity(b.cols(), b.cols());
    rep.gram_residual = gram.size() ? gram.cwiseAbs().maxCoeff() : 0.0;
    for (Eigen::Index c = 0; c < space.basis.cols(); ++c)
        rep.equivariance = std::max(rep.equivariance, equivariance_residual(q, rho, space.basis.col(c)));

    const CVector chi = rho.character();
    Complex total = 0.0;
    for (int k = 0; k < q.subgroup().order(); ++k) {
        int fixed = 0;
        for (int p = 0; p < q.ambient().order(); ++p) fixed += q.ambient().mul(p, q.ambient_index(k)) == p;
        total += static_cast<double>(fixed) * chi(k);
    }
    rep.character_dim = total.real() / q.subgroup().order();
    return rep;
}

ModuleSection section_of(const HomogeneousSpace& q, const Irrep& rho, const CVector& psi) {
    const int d = rho.dim;
    if (psi.size() != static_cast<Eigen::Index>(q.ambient().order()) * d)
        throw ValidationError("section_of: vector length != |G'| d_rho");
    ModuleSection s{CMatrix(d, q.size())};
    for (int c = 0; c < q.size(); ++c) s.values.col(c) = psi.segment(q.coset_reps()[c] * d, d);
    return s;
}

CVector equivariant_of(const HomogeneousSpace& q, const Irrep& rho, const ModuleSection& s) {
    const int d = rho.dim;
    check_section(s, d, q.size(), "equivariant_of");
    CVector psi(static_cast<Eigen::Index>(q.ambient().order()) * d);
    for (int p = 0; p < q.ambient().order(); ++p)
        psi.segment(p * d, d) = rho.matrices[q.fiber_element(p)].adjoint() * s.values.col(q.coset_of(p));
    return psi;
}

CVector module_inner(const ModuleSection& psi, const ModuleSection& phi) {
    if (psi.values.rows() != phi.values.rows() || psi.values.cols() != phi.values.cols())
        throw ValidationError("module_inner: sections of different bundles");
    CVector out(psi.values.cols());
    for (Eigen::Index c = 0; c < out.size(); ++c) out(c) = psi.values.col(c).dot(phi.values.col(c));
    return out;
}

ModuleSection right_action(const CVector& f, const ModuleSection& psi) {
    if (f.size() != psi.values.cols()) throw ValidationError("right_action: function length != |Q|");
    return ModuleSection{psi.values * f.asDiagonal()};
}

std::vector<ModuleSection> point_sections(int points, int dim) {
    if (points < 1 || dim < 1) throw DomainError("point_sections: need at least one point and dimension 1");
    std::vector<ModuleSection> out;
    for (int c = 0; c < points; ++c)
        for (int i = 0; i < dim; ++i) {
            ModuleSection s{CMatrix::Zero(dim, points)};
            s.values(i, c) = 1.0;
            out.push_back(std::move(s));
        }
    return out;
}

compact::InducedSpace induce_at_point(int q, std::span<const ModuleSection> sections, double rank_tol) {
    if (sections.empty()) throw DomainError("induce_at_point: no sections");
    const Eigen::Index d = sections.front().values.rows(), points = sections.front().values.cols();
    if (q < 0 || q >= points) throw DomainError("induce_at_point: point out of range");
    CMatrix fiber(d, static_cast<Eigen::Index>(sections.size()));
    for (std::size_t a = 0; a < sections.size(); ++a) {
        check_section(sections[a], d, points, "induce_at_point");
        fiber.col(static_cast<Eigen::Index>(a)) = sections[a].values.col(q);
    }
    // M(b, a) = psi_b(q)^* psi_a(q)
    return compact::induce(numerics::GramForm(fiber.adjoint() * fiber), rank_tol);
}

U1Norms u1_module_norm_check(std::span<const Complex> coefficients) {
    U1Norms n;
    double sum = 0.0;
    for (const Complex& c : coefficients) {
        n.sup = std::max(n.sup, std::abs(c));
        sum += std::norm(c);
    }
    n.l2 = std::sqrt(sum);
    if (n.sup > n.l2 * (1.0 + 1e-15)) throw ConvergenceError("u1_module_norm_check: sup exceeds the L2 norm");
    return n;
}

}  // namespace rieffel::mackey
