#pragma once

#include <string>

#include "rieffel/compact/unitary_rep.hpp"
#include "rieffel/numerics/linalg.hpp"

namespace rieffel::compact {

using numerics::GramForm;

enum class FormOrigin { GroupAveraged, MomentMap, VectorState, Torus, Given };

const char* to_string(FormOrigin o);

/// The averaged sesquilinear form (Psi, Phi)_0 as a Gram matrix on a finite
/// carrier, tagged with how it was built.
struct ModifiedForm {
    GramForm form;
    FormOrigin origin = FormOrigin::Given;
};

/// P = (1/|G|) sum_g U(g) (x) U_rho(g), the projector onto the trivial
/// isotypic component. Idempotency is asserted to 1e-12.
CMatrix haar_projector(const UnitaryRep& u, const UnitaryRep& rho);

/// (Psi, Phi)_0 = (1/|G|) sum_g ((U (x) U_rho)(g) Psi, Phi); the Gram matrix is P.
ModifiedForm modified_form(const UnitaryRep& u, const UnitaryRep& rho);

/// <psi, phi>(g) = (U(g) phi, psi).
GroupAlgElem moment_map(const UnitaryRep& u, const CVector& psi, const CVector& phi);

/// Gram matrix assembled entry by entry from the moment map:
/// (psi (x) v, phi (x) w)_0 = (pi_rho(<phi, psi>) v, w).
ModifiedForm moment_map_form(const UnitaryRep& u, const UnitaryRep& rho);

/// Joint kernel of U(g^-1) (x) 1 - 1 (x) U_rho(g) over all g (orthonormal columns).
CMatrix dirac_subspace(const UnitaryRep& u, const UnitaryRep& rho, double rank_tol = numerics::kDefaultRankTol);

/// D_0: the span of the ranges of the same operators (orthonormal columns).
CMatrix constraint_span(const UnitaryRep& u, const UnitaryRep& rho, double rank_tol = numerics::kDefaultRankTol);

/// Quotient of the carrier by the null space of a form.
struct InducedSpace {
    CMatrix basis;       // orthonormal representatives of the quotient (columns)
    CMatrix null_basis;  // N_0
    CMatrix gram;        // induced inner product in the representative coordinates

    Eigen::Index dim() const { return basis.cols(); }
    /// Coordinates of V Psi.
    CVector project(const CVector& psi) const { return basis.adjoint() * psi; }
    /// (V Psi, V Phi)^rho.
    Complex inner(const CVector& vpsi, const CVector& vphi) const { return vphi.dot(gram * vpsi); }
};

/// Throws NotPositiveError for a form that is not PSD to rank_tol.
InducedSpace induce(const GramForm& form, double rank_tol = numerics::kDefaultRankTol);
inline InducedSpace induce(const ModifiedForm& f, double rank_tol = numerics::kDefaultRankTol) {
    return induce(f.form, rank_tol);
}

/// |(A psi, phi)_0 - (psi, A^* phi)_0|.
double certification_residual(const CMatrix& a, const GramForm& form, const CVector& psi, const CVector& phi);

/// Weak-observable certificate over all basis pairs (e_col, e_row).
struct Certification {
    bool certified = false;
    double residual = 0.0;  // largest residual over the spanning pairs
    Eigen::Index psi_index = 0, phi_index = 0;
};
Certification certify_observable(const CMatrix& a, const GramForm& form, double tol = 1e-10);

/// pi^0(A) in the representative coordinates of `space`.
/// Throws ValidationError naming the violating pair when A is not certified.
CMatrix induced_operator(const CMatrix& a, const InducedSpace& space, const GramForm& form, double tol = 1e-10);

/// Smallest C with (A Psi, A Psi)_0 <= C (Psi, Psi)_0, i.e. the top generalized
/// eigenvalue of (A^* G A, G) on the complement of N_0.
double rieffel_bound(const CMatrix& a, const GramForm& form, const InducedSpace& space);

/// Operator norm of pi^0(A) with respect to the induced inner product.
double induced_operator_norm(const CMatrix& pi0, const InducedSpace& space);

/// Torus version of modified_form; Haar integrals by weight bookkeeping, so the
/// Gram matrix is diagonal with 1 exactly where the total weight vanishes.
ModifiedForm torus_modified_form(const TorusRep& u, const TorusRep& rho);

/// (psi, phi)_0^{omega_v} = (pi_rho(<phi, psi>) v, v) on the carrier of u.
ModifiedForm vector_state_form(const UnitaryRep& u, const UnitaryRep& rho, const CVector& v);

/// Carrier C^|G| (the group algebra, basis delta_g) with <A, B> = A^* * B and
/// the state f -> f_hat(trivial) = (1/|G|) sum_g f(g).
ModifiedForm gns_form(const FiniteGroup& g);

}  // namespace rieffel::compact
