#include "rieffel/numerics/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::numerics {

namespace {

template <class T>
T pairwise_impl(std::span<const T> v) {
    if (v.size() <= 8) {
        T s{};
        for (const auto& x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_impl(v.subspan(0, half)) + pairwise_impl(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise_impl(values); }
Complex pairwise_sum(std::span<const Complex> values) { return pairwise_impl(values); }

GramForm::GramForm(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw ValidationError("GramForm: matrix must be square");
    const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        std::ostringstream os;
        os << "GramForm: matrix not Hermitian (deviation " << asym << ")";
        throw ValidationError(os.str());
    }
    // Symmetrize the rounding residue so the eigensolver sees an exact Hermitian matrix.
    matrix_ = 0.5 * (matrix_ + matrix_.adjoint());
}

NullspaceSplit nullspace_basis(const GramForm& form, double rank_tol) {
    if (!(rank_tol > 0)) throw DomainError("nullspace_basis: rank_tol must be positive");
    const Eigen::Index n = form.dimension();
    NullspaceSplit out;
    if (n == 0) return out;

    Eigen::SelfAdjointEigenSolver<CMatrix> es(form.matrix());
    const RVector& ev = es.eigenvalues();
    const CMatrix& vecs = es.eigenvectors();
    out.eigenvalues = ev;

    const double top = ev.cwiseAbs().maxCoeff();
    const double cut = rank_tol * top;
    if (ev(0) < -cut) {
        std::ostringstream os;
        os << "nullspace_basis: form is not positive semi-definite (eigenvalue " << ev(0) << ", top " << top << ")";
        throw NotPositiveError(os.str(), ev(0));
    }

    std::vector<Eigen::Index> null_idx, keep_idx;
    for (Eigen::Index i = 0; i < n; ++i) (top == 0.0 || ev(i) < cut ? null_idx : keep_idx).push_back(i);

    out.null_basis.resize(n, static_cast<Eigen::Index>(null_idx.size()));
    for (std::size_t k = 0; k < null_idx.size(); ++k) out.null_basis.col(k) = vecs.col(null_idx[k]);
    out.complement_basis.resize(n, static_cast<Eigen::Index>(keep_idx.size()));
    out.complement_eigenvalues.resize(static_cast<Eigen::Index>(keep_idx.size()));
    for (std::size_t k = 0; k < keep_idx.size(); ++k) {
        out.complement_basis.col(k) = vecs.col(keep_idx[k]);
        out.complement_eigenvalues(k) = ev(keep_idx[k]);
    }
    return out;
}

CMatrix column_space(const CMatrix& m, double rank_tol) {
    if (m.size() == 0) return CMatrix(m.rows(), 0);
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU);
    const RVector& s = svd.singularValues();
    const double top = s.size() ? s(0) : 0.0;
    Eigen::Index rank = 0;
    while (rank < s.size() && top > 0 && s(rank) > rank_tol * top) ++rank;
    return svd.matrixU().leftCols(rank);
}

CMatrix kernel(const CMatrix& m, double rank_tol) {
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    const RVector& s = svd.singularValues();
    const double top = s.size() ? s(0) : 0.0;
    Eigen::Index rank = 0;
    while (rank < s.size() && top > 0 && s(rank) > rank_tol * top) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

double subspace_distance(const CMatrix& a, const CMatrix& b) {
    double worst = 0.0;
    const Eigen::Index n = std::max(a.rows(), b.rows());
    auto residual = [&](const CMatrix& from, const CMatrix& onto) {
        for (Eigen::Index j = 0; j < from.cols(); ++j) {
            CVector v = from.col(j);
            if (onto.cols() > 0) v -= onto * (onto.adjoint() * v);
            worst = std::max(worst, v.norm());
        }
    };
    if (n == 0) return 0.0;
    residual(a, b);
    residual(b, a);
    return worst;
}

double operator_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace rieffel::numerics
