#include "rieffel/compact/unitary_rep.hpp"

#include <cstdlib>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::compact {

UnitaryRep make_rep(const FiniteGroup& g, std::vector<CMatrix> matrices) {
    const int n = g.order();
    if (static_cast<int>(matrices.size()) != n) throw ValidationError("make_rep: need one matrix per group element");
    const Eigen::Index d = matrices.front().rows();
    const CMatrix id = CMatrix::Identity(d, d);
    for (int a = 0; a < n; ++a) {
        if (matrices[a].rows() != d || matrices[a].cols() != d) throw ValidationError("make_rep: inconsistent matrix shapes");
        if ((matrices[a].adjoint() * matrices[a] - id).cwiseAbs().maxCoeff() > 1e-12)
            throw ValidationError("make_rep: U(" + std::to_string(a) + ") not unitary");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((matrices[a] * matrices[b] - matrices[g.mul(a, b)]).cwiseAbs().maxCoeff() > 1e-12) {
                std::ostringstream os;
                os << "make_rep: U(" << a << ")U(" << b << ") != U(" << g.mul(a, b) << ")";
                throw ValidationError(os.str());
            }
    return UnitaryRep{g, std::move(matrices)};
}

UnitaryRep regular_rep(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<CMatrix> mats(n, CMatrix::Zero(n, n));
    for (int a = 0; a < n; ++a)
        for (int h = 0; h < n; ++h) mats[a](g.mul(a, h), h) = 1.0;
    return UnitaryRep{g, std::move(mats)};
}

UnitaryRep irrep_rep(const FiniteGroup& g, const groups::Irrep& irrep) { return make_rep(g, irrep.matrices); }

UnitaryRep trivial_rep(const FiniteGroup& g, Eigen::Index dim) {
    return UnitaryRep{g, std::vector<CMatrix>(g.order(), CMatrix::Identity(dim, dim))};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix rep_of_algebra(const UnitaryRep& u, const GroupAlgElem& f) {
    if (f.size() != u.group.order()) throw ValidationError("rep_of_algebra: element does not belong to the group");
    CMatrix out = CMatrix::Zero(u.dim(), u.dim());
    for (int g = 0; g < u.group.order(); ++g) out += f(g) * u.matrices[g];
    return out / static_cast<double>(u.group.order());
}

CMatrix right_rep(const UnitaryRep& u, const GroupAlgElem& f) {
    if (f.size() != u.group.order()) throw ValidationError("right_rep: element does not belong to the group");
    CMatrix out = CMatrix::Zero(u.dim(), u.dim());
    for (int g = 0; g < u.group.order(); ++g) out += f(g) * u.matrices[u.group.inverse(g)];
    return out / static_cast<double>(u.group.order());
}

TorusRep make_torus_rep(int rank, int truncation, std::vector<std::vector<int>> weights) {
    if (rank < 1) throw ValidationError("torus rank must be >= 1");
    if (truncation < 0) throw ValidationError("torus truncation must be >= 0");
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != rank) throw ValidationError("torus weight has wrong length");
        for (int l : w)
            if (std::abs(l) > truncation)
                throw ValidationError("torus weight " + std::to_string(l) + " exceeds truncation " + std::to_string(truncation));
    }
    return TorusRep{rank, truncation, std::move(weights)};
}

TorusRep torus_regular(int rank, int truncation) {
    std::vector<std::vector<int>> weights;
    std::vector<int> w(rank, -truncation);
    for (;;) {
        weights.push_back(w);
        int k = rank - 1;
        while (k >= 0 && w[k] == truncation) w[k--] = -truncation;
        if (k < 0) break;
        ++w[k];
    }
    return make_torus_rep(rank, truncation, std::move(weights));
}

TorusRep torus_character(std::vector<int> w, int truncation) {
    const int rank = static_cast<int>(w.size());
    return make_torus_rep(rank, truncation, {std::move(w)});
}

}  // namespace rieffel::compact
