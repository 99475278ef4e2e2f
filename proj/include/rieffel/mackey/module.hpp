#pragma once

#include <span>
#include <vector>

#include "rieffel/compact/induction.hpp"
#include "rieffel/mackey/homogeneous_space.hpp"

namespace rieffel::mackey {

using groups::Irrep;
using numerics::CMatrix;
using numerics::Complex;
using numerics::CVector;

// Vectors of L2(G') (x) H_rho use the index (p, i) -> p * d_rho + i.

/// Orthonormal basis (columns) of the equivariant functions
/// psi(p g) = U_rho(g^-1) psi(p): psi_{r,i}(r g) = U_rho(g^-1) e_i / sqrt|G|.
/// Column index (q, i) -> q * d_rho + i. Throws ValidationError if rho is not
/// a representation of the subgroup.
CMatrix induce_mackey(const HomogeneousSpace& q, const Irrep& rho);

/// max over p, g of |psi(p g) - U_rho(g^-1) psi(p)|.
double equivariance_residual(const HomogeneousSpace& q, const Irrep& rho, const CVector& psi);

/// Right translation of G on L2(G'): (U(g) psi)(p) = psi(p g).
compact::UnitaryRep right_translation(const HomogeneousSpace& q);

struct MackeyReport {
    Eigen::Index mackey_dim = 0;     // columns of induce_mackey
    Eigen::Index rieffel_dim = 0;    // rank of the averaged form
    Eigen::Index dirac_dim = 0;      // joint kernel of the constraints
    double character_dim = 0.0;      // (1/|G|) sum_g #{p : p g = p} chi_rho(g)
    double projector_trace = 0.0;
    double span_residual = 0.0;      // mutual projection of the two subspaces
    double gram_residual = 0.0;      // || B^* P B - 1 ||, max entry
    double equivariance = 0.0;       // worst column of the Rieffel quotient basis
};

/// Compares the quotient from compact-rieffel induction (U = right translation)
/// with the equivariant-function construction.
MackeyReport rieffel_vs_mackey(const HomogeneousSpace& q, const Irrep& rho);

/// H_rho-valued function on Q: column q is the fiber value.
struct ModuleSection {
    CMatrix values;  // d_rho x |Q|
};

/// Section of an equivariant function (its values on the coset representatives).
ModuleSection section_of(const HomogeneousSpace& q, const Irrep& rho, const CVector& psi);
/// The equivariant function psi(r g) = U_rho(g^-1) s(r).
CVector equivariant_of(const HomogeneousSpace& q, const Irrep& rho, const ModuleSection& s);

/// <psi, phi>(q) = (phi(q), psi(q))_rho = psi(q)^* phi(q).
CVector module_inner(const ModuleSection& psi, const ModuleSection& phi);

/// (pi_R(f) psi)(q) = f(q) psi(q).
ModuleSection right_action(const CVector& f, const ModuleSection& psi);

/// Sections e_i at the point q and zero elsewhere; index q * dim + i.
std::vector<ModuleSection> point_sections(int points, int dim);

/// Induction from the module at the pure state "evaluate at q":
/// (psi, phi)_0 = (psi(q), phi(q))_rho on span(sections).
compact::InducedSpace induce_at_point(int q, std::span<const ModuleSection> sections,
                                      double rank_tol = numerics::kDefaultRankTol);

struct U1Norms {
    double sup = 0.0;  // C*-module norm: sup_n |psi_n|
    double l2 = 0.0;
};
/// Both norms of a truncated U(1) section given by its Fourier coefficients.
U1Norms u1_module_norm_check(std::span<const Complex> coefficients);

}  // namespace rieffel::mackey
