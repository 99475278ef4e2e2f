#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rieffel::numerics {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;

/// Sum in a fixed binary tree over the index order, so results do not depend
/// on how a caller chunked the data.
double pairwise_sum(std::span<const double> values);
Complex pairwise_sum(std::span<const Complex> values);

/// Inner product linear in the first slot: (a, b) = b^H a.
inline Complex inner(const CVector& a, const CVector& b) { return b.dot(a); }

/// Hermitian positive semi-definite sesquilinear form restricted to a finite
/// basis. The form is evaluated as form(psi, phi) = phi^H M psi.
class GramForm {
public:
    GramForm() = default;
    /// Throws ValidationError when `matrix` is not square or not Hermitian to
    /// 1e-12 relative to its largest entry.
    explicit GramForm(CMatrix matrix);

    const CMatrix& matrix() const noexcept { return matrix_; }
    Eigen::Index dimension() const noexcept { return matrix_.rows(); }

    Complex operator()(const CVector& psi, const CVector& phi) const { return phi.dot(matrix_ * psi); }

private:
    CMatrix matrix_;
};

/// Orthonormal split of the carrier into the null space of a form and its
/// orthogonal complement (which represents the quotient).
struct NullspaceSplit {
    CMatrix null_basis;        // columns span N0
    CMatrix complement_basis;  // columns span N0^perp
    RVector complement_eigenvalues;
    RVector eigenvalues;  // full ascending spectrum
};

/// Eigen-decomposes the form and splits at rank_tol times the top eigenvalue.
/// Throws NotPositiveError when an eigenvalue is below -rank_tol * top.
NullspaceSplit nullspace_basis(const GramForm& form, double rank_tol = kDefaultRankTol);

/// Orthonormal basis of the column space of `m` (singular values above
/// rank_tol times the largest).
CMatrix column_space(const CMatrix& m, double rank_tol = kDefaultRankTol);

/// Orthonormal basis of the kernel of `m`.
CMatrix kernel(const CMatrix& m, double rank_tol = kDefaultRankTol);

/// Largest of ||(I - P_B) a_i|| and ||(I - P_A) b_j|| over orthonormal column
/// bases A and B; zero iff the spans agree.
double subspace_distance(const CMatrix& a, const CMatrix& b);

/// Largest singular value.
double operator_norm(const CMatrix& m);

}  // namespace rieffel::numerics
