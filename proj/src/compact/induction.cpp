#include "rieffel/compact/induction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::compact {

namespace {

void require_same_group(const UnitaryRep& u, const UnitaryRep& rho, const char* op) {
    if (!(u.group == rho.group)) throw ValidationError(std::string(op) + ": representations of different groups");
}

// U(g^-1) (x) 1 - 1 (x) U_rho(g): pi_R(|G| delta_g) - pi_rho(|G| delta_g) on H (x) H_rho.
CMatrix constraint_operator(const UnitaryRep& u, const UnitaryRep& rho, int g) {
    const Eigen::Index du = u.dim(), dr = rho.dim();
    return kron(u.matrices[u.group.inverse(g)], CMatrix::Identity(dr, dr)) - kron(CMatrix::Identity(du, du), rho.matrices[g]);
}

}  // namespace

const char* to_string(FormOrigin o) {
    switch (o) {
        case FormOrigin::GroupAveraged: return "group-averaged";
        case FormOrigin::MomentMap: return "moment-map";
        case FormOrigin::VectorState: return "vector-state";
        case FormOrigin::Torus: return "torus-weights";
        case FormOrigin::Given: return "given";
    }
    return "unknown";
}

CMatrix haar_projector(const UnitaryRep& u, const UnitaryRep& rho) {
    require_same_group(u, rho, "haar_projector");
    const Eigen::Index n = u.dim() * rho.dim();
    CMatrix p = CMatrix::Zero(n, n);
    for (int g = 0; g < u.group.order(); ++g) p += kron(u.matrices[g], rho.matrices[g]);
    p /= static_cast<double>(u.group.order());
    const double idem = n ? (p * p - p).cwiseAbs().maxCoeff() : 0.0;
    if (idem > 1e-12) {
        std::ostringstream os;
        os << "haar_projector: average is not idempotent (residual " << idem << ")";
        throw ConvergenceError(os.str());
    }
    return p;
}

ModifiedForm modified_form(const UnitaryRep& u, const UnitaryRep& rho) {
    return ModifiedForm{GramForm(haar_projector(u, rho)), FormOrigin::GroupAveraged};
}

GroupAlgElem moment_map(const UnitaryRep& u, const CVector& psi, const CVector& phi) {
    if (psi.size() != u.dim() || phi.size() != u.dim()) throw ValidationError("moment_map: vector dimension mismatch");
    GroupAlgElem out(u.group.order());
    for (int g = 0; g < u.group.order(); ++g) out(g) = psi.dot(u.matrices[g] * phi);
    return out;
}

ModifiedForm moment_map_form(const UnitaryRep& u, const UnitaryRep& rho) {
    require_same_group(u, rho, "moment_map_form");
    const Eigen::Index du = u.dim(), dr = rho.dim();
    CMatrix m(du * dr, du * dr);
    for (Eigen::Index a = 0; a < du; ++a)
        for (Eigen::Index b = 0; b < du; ++b) {
            const CMatrix block = rep_of_algebra(rho, moment_map(u, CVector::Unit(du, b), CVector::Unit(du, a)));
            // Entry ((b, j), (a, i)) = (pi_rho(<e_b, e_a>) e_i, e_j) = block(j, i).
            for (Eigen::Index i = 0; i < dr; ++i)
                for (Eigen::Index j = 0; j < dr; ++j) m(b * dr + j, a * dr + i) = block(j, i);
        }
    return ModifiedForm{GramForm(m), FormOrigin::MomentMap};
}

CMatrix dirac_subspace(const UnitaryRep& u, const UnitaryRep& rho, double rank_tol) {
    require_same_group(u, rho, "dirac_subspace");
    const Eigen::Index n = u.dim() * rho.dim();
    const int order = u.group.order();
    CMatrix stacked(n * order, n);
    for (int g = 0; g < order; ++g) stacked.middleRows(g * n, n) = constraint_operator(u, rho, g);
    return numerics::kernel(stacked, rank_tol);
}

CMatrix constraint_span(const UnitaryRep& u, const UnitaryRep& rho, double rank_tol) {
    require_same_group(u, rho, "constraint_span");
    const Eigen::Index n = u.dim() * rho.dim();
    const int order = u.group.order();
    CMatrix side(n, n * order);
    for (int g = 0; g < order; ++g) side.middleCols(g * n, n) = constraint_operator(u, rho, g);
    return numerics::column_space(side, rank_tol);
}

InducedSpace induce(const GramForm& form, double rank_tol) {
    const numerics::NullspaceSplit split = numerics::nullspace_basis(form, rank_tol);
    InducedSpace s;
    s.basis = split.complement_basis;
    s.null_basis = split.null_basis;
    s.gram = s.basis.adjoint() * form.matrix() * s.basis;
    s.gram = 0.5 * (s.gram + s.gram.adjoint()).eval();
    return s;
}

double certification_residual(const CMatrix& a, const GramForm& form, const CVector& psi, const CVector& phi) {
    return std::abs(form(a * psi, phi) - form(psi, a.adjoint() * phi));
}

Certification certify_observable(const CMatrix& a, const GramForm& form, double tol) {
    if (a.rows() != form.dimension() || a.cols() != form.dimension())
        throw ValidationError("certify_observable: operator does not act on the carrier");
    // (A e_c, e_r)_0 - (e_c, A^* e_r)_0 = (M A - A M)(r, c).
    const CMatrix& m = form.matrix();
    const CMatrix comm = m * a - a * m;
    Certification c;
    for (Eigen::Index col = 0; col < comm.cols(); ++col)
        for (Eigen::Index row = 0; row < comm.rows(); ++row)
            if (std::abs(comm(row, col)) > c.residual) {
                c.residual = std::abs(comm(row, col));
                c.psi_index = col;
                c.phi_index = row;
            }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * a.cwiseAbs().maxCoeff());
    c.certified = c.residual <= tol * scale;
    return c;
}

CMatrix induced_operator(const CMatrix& a, const InducedSpace& space, const GramForm& form, double tol) {
    const Certification c = certify_observable(a, form, tol);
    if (!c.certified) {
        std::ostringstream os;
        os << "induced_operator: not a weak observable; (A psi, phi)_0 != (psi, A^* phi)_0 for psi = e_" << c.psi_index
           << ", phi = e_" << c.phi_index << " (residual " << c.residual << ")";
        throw ValidationError(os.str());
    }
    return space.basis.adjoint() * a * space.basis;
}

double rieffel_bound(const CMatrix& a, const GramForm& form, const InducedSpace& space) {
    if (space.dim() == 0) return 0.0;
    const CMatrix& q = space.basis;
    const CMatrix num = q.adjoint() * a.adjoint() * form.matrix() * a * q;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(space.gram);
    const numerics::RVector inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    const CMatrix w = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    CMatrix sym = w * num * w;
    sym = 0.5 * (sym + sym.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> top(sym, Eigen::EigenvaluesOnly);
    return std::max(0.0, top.eigenvalues().maxCoeff());
}

double induced_operator_norm(const CMatrix& pi0, const InducedSpace& space) {
    if (space.dim() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(space.gram);
    const CMatrix half = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    const CMatrix inv_half =
        es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
    return numerics::operator_norm(half * pi0 * inv_half);
}

ModifiedForm torus_modified_form(const TorusRep& u, const TorusRep& rho) {
    if (u.rank != rho.rank) throw ValidationError("torus_modified_form: rank mismatch");
    const Eigen::Index du = u.dim(), dr = rho.dim();
    CMatrix m = CMatrix::Zero(du * dr, du * dr);
    for (Eigen::Index a = 0; a < du; ++a)
        for (Eigen::Index i = 0; i < dr; ++i) {
            bool zero = true;
            for (int k = 0; k < u.rank && zero; ++k) zero = u.weights[a][k] + rho.weights[i][k] == 0;
            if (zero) m(a * dr + i, a * dr + i) = 1.0;
        }
    return ModifiedForm{GramForm(m), FormOrigin::Torus};
}

ModifiedForm vector_state_form(const UnitaryRep& u, const UnitaryRep& rho, const CVector& v) {
    require_same_group(u, rho, "vector_state_form");
    if (v.size() != rho.dim()) throw ValidationError("vector_state_form: state vector dimension mismatch");
    const int order = u.group.order();
    CVector omega(order);
    for (int g = 0; g < order; ++g) omega(g) = v.dot(rho.matrices[g] * v);
    CMatrix m = CMatrix::Zero(u.dim(), u.dim());
    for (int g = 0; g < order; ++g) m += omega(g) * u.matrices[g];
    return ModifiedForm{GramForm(m / static_cast<double>(order)), FormOrigin::VectorState};
}

ModifiedForm gns_form(const FiniteGroup& g) {
    const int n = g.order();
    CMatrix m(n, n);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            GroupAlgElem da = GroupAlgElem::Unit(n, a), db = GroupAlgElem::Unit(n, b);
            m(b, a) = groups::convolve(g, groups::adjoint(g, db), da).sum() / static_cast<double>(n);
        }
    return ModifiedForm{GramForm(m), FormOrigin::VectorState};
}

}  // namespace rieffel::compact
