#pragma once

#include <vector>

#include "rieffel/groups/finite_group.hpp"

namespace rieffel::mackey {

using groups::FiniteGroup;

/// Q = G'/G with G given by element indices of G'. Points of Q are the cosets
/// pG, numbered in order of their smallest element.
class HomogeneousSpace {
public:
    /// Throws ValidationError unless the indices are distinct, in range and
    /// closed under the table (checked exhaustively).
    HomogeneousSpace(FiniteGroup ambient, std::vector<int> subgroup);

    const FiniteGroup& ambient() const noexcept { return ambient_; }
    /// G as a group in its own right; local index k is ambient element elements()[k],
    /// local 0 is the identity.
    const FiniteGroup& subgroup() const noexcept { return subgroup_; }
    const std::vector<int>& elements() const noexcept { return elements_; }
    int size() const noexcept { return static_cast<int>(reps_.size()); }
    const std::vector<int>& coset_reps() const noexcept { return reps_; }
    int coset_of(int p) const { return coset_[p]; }
    /// Local index of the g in G with p = coset_reps()[coset_of(p)] * g.
    int fiber_element(int p) const { return fiber_[p]; }
    /// Ambient index of the local element k.
    int ambient_index(int k) const { return elements_[k]; }

private:
    FiniteGroup ambient_, subgroup_;
    std::vector<int> elements_, reps_, coset_, fiber_;
};

}  // namespace rieffel::mackey
