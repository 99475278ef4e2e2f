#pragma once

#include <vector>

#include "rieffel/groups/finite_group.hpp"

namespace rieffel::groups {

/// Complex function on the group, one coefficient per element index.
using GroupAlgElem = CVector;

/// One d_gamma x d_gamma block per irrep, in dual-list order.
using PlancherelBlocks = std::vector<CMatrix>;

/// Haar measure has total mass 1: f_hat(gamma) = (1/|G|) sum_g f(g) U_gamma(g).
/// Throws ValidationError when sum d^2 != |G|.
PlancherelBlocks plancherel(const GroupAlgElem& f, const DualList& dual);

/// f(g) = sum_gamma d_gamma Tr[U_gamma(g)^* f_hat(gamma)].
GroupAlgElem inverse_plancherel(const PlancherelBlocks& blocks, const DualList& dual);

/// (f1 * f2)(g) = (1/|G|) sum_h f1(h) f2(h^-1 g).
GroupAlgElem convolve(const FiniteGroup& g, const GroupAlgElem& f1, const GroupAlgElem& f2);

/// f^*(g) = conj(f(g^-1)).
GroupAlgElem adjoint(const FiniteGroup& g, const GroupAlgElem& f);

/// max over gamma of the largest singular value of f_hat(gamma).
double cstar_norm(const GroupAlgElem& f, const DualList& dual);

/// |G| delta_g, the unit-mass point function at g.
GroupAlgElem point_mass(const FiniteGroup& g, int element);

}  // namespace rieffel::groups
