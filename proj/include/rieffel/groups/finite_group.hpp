#pragma once

#include <string>
#include <vector>

#include "rieffel/numerics/linalg.hpp"

namespace rieffel::groups {

using numerics::CMatrix;
using numerics::Complex;
using numerics::CVector;

/// Group given by its Cayley table: table[a][b] is the index of a*b.
class FiniteGroup {
public:
    FiniteGroup() = default;
    /// Validates the table (closure, identity, inverses, associativity:
    /// exhaustive for order <= 64, 10^4 seeded random triples otherwise).
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    const std::string& name() const noexcept { return name_; }
    int order() const noexcept { return static_cast<int>(table_.size()); }
    int identity() const noexcept { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverses_[a]; }
    const std::vector<std::vector<int>>& table() const noexcept { return table_; }
    bool is_abelian() const;

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverses_;
    int identity_ = 0;
};

/// Unitary irreducible representation: one dim x dim matrix per element.
struct Irrep {
    std::string label;
    int dim = 1;
    std::vector<CMatrix> matrices;

    CVector character() const;
};

using DualList = std::vector<Irrep>;

/// Unitarity and homomorphism to 1e-12, irreducibility by sum |chi|^2 = |G| to 1e-10.
void validate_irrep(const FiniteGroup& g, const Irrep& rep);

/// Each irrep valid, pairwise inequivalent by characters (1e-10), sum d^2 = |G|.
void validate_dual(const FiniteGroup& g, const DualList& dual);

/// Index of an irrep equivalent to the complex conjugate of dual[k].
int conjugate_irrep(const DualList& dual, int k);

/// A subgroup given by element indices of the ambient group.
struct NamedSubgroup {
    std::string label;
    std::vector<int> elements;
};

/// A group together with its (complete) unitary dual and any named subgroups.
struct GroupData {
    FiniteGroup group;
    DualList dual;
    std::vector<NamedSubgroup> subgroups;
};

/// Characters of a cyclic group, built from an element of full order:
/// label "w<m>" sends generator^k to exp(2 pi i k m / n).
DualList cyclic_dual(const FiniteGroup& g);

}  // namespace rieffel::groups
