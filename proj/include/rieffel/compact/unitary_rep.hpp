#pragma once

#include <vector>

#include "rieffel/groups/finite_group.hpp"
#include "rieffel/groups/group_algebra.hpp"

namespace rieffel::compact {

using groups::FiniteGroup;
using groups::GroupAlgElem;
using numerics::CMatrix;
using numerics::Complex;
using numerics::CVector;

/// Unitary representation of a finite group: one matrix per element.
struct UnitaryRep {
    FiniteGroup group;
    std::vector<CMatrix> matrices;

    Eigen::Index dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

/// Validates unitarity and the homomorphism property to 1e-12.
UnitaryRep make_rep(const FiniteGroup& g, std::vector<CMatrix> matrices);

/// Left regular representation on C^|G|: U(g) e_h = e_{gh}.
UnitaryRep regular_rep(const FiniteGroup& g);
UnitaryRep irrep_rep(const FiniteGroup& g, const groups::Irrep& irrep);
UnitaryRep trivial_rep(const FiniteGroup& g, Eigen::Index dim = 1);

/// A (x) B with row index (a, i) -> a * dim(B) + i.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// pi(f) = (1/|G|) sum_g f(g) U(g); a representation of the convolution algebra.
CMatrix rep_of_algebra(const UnitaryRep& u, const GroupAlgElem& f);

/// pi_R(f) = (1/|G|) sum_g f(g) U(g^-1); an anti-representation.
CMatrix right_rep(const UnitaryRep& u, const GroupAlgElem& f);

/// Representation of U(1)^rank given by one weight vector per basis vector,
/// truncated to |l_i| <= truncation.
struct TorusRep {
    int rank = 1;
    int truncation = 8;
    std::vector<std::vector<int>> weights;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(weights.size()); }
};

/// Validates weight lengths and the truncation bound.
TorusRep make_torus_rep(int rank, int truncation, std::vector<std::vector<int>> weights);

/// All weights with |l_i| <= truncation, lexicographic order (regular rep, truncated).
TorusRep torus_regular(int rank, int truncation);

/// The one-dimensional representation with weight w.
TorusRep torus_character(std::vector<int> w, int truncation);

}  // namespace rieffel::compact
