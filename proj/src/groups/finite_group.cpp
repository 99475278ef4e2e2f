#include "rieffel/groups/finite_group.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::groups {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    const int n = order();
    if (n == 0) throw ValidationError("group '" + name_ + "': empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw ValidationError("group '" + name_ + "': table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw ValidationError("group '" + name_ + "': table entry out of range");
    }

    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw ValidationError("group '" + name_ + "': no identity element");

    inverses_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverses_[a] = b;
                break;
            }
        if (inverses_[a] < 0) throw ValidationError("group '" + name_ + "': element " + std::to_string(a) + " has no inverse");
    }

    auto check = [&](int a, int b, int c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            std::ostringstream os;
            os << "group '" << name_ << "': associativity fails at (" << a << "," << b << "," << c << ")";
            throw ValidationError(os.str());
        }
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 10000; ++k) check(pick(rng), pick(rng), pick(rng));
    }
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < a; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

CVector Irrep::character() const {
    CVector chi(static_cast<Eigen::Index>(matrices.size()));
    for (std::size_t g = 0; g < matrices.size(); ++g) chi(static_cast<Eigen::Index>(g)) = matrices[g].trace();
    return chi;
}

void validate_irrep(const FiniteGroup& g, const Irrep& rep) {
    const int n = g.order();
    auto fail = [&](const std::string& why) { throw ValidationError("irrep '" + rep.label + "' of " + g.name() + ": " + why); };
    if (static_cast<int>(rep.matrices.size()) != n) fail("needs one matrix per group element");
    for (const auto& m : rep.matrices)
        if (m.rows() != rep.dim || m.cols() != rep.dim) fail("matrix shape does not match dimension");
    const CMatrix id = CMatrix::Identity(rep.dim, rep.dim);
    for (int a = 0; a < n; ++a) {
        if ((rep.matrices[a].adjoint() * rep.matrices[a] - id).cwiseAbs().maxCoeff() > 1e-12)
            fail("matrix " + std::to_string(a) + " not unitary");
        for (int b = 0; b < n; ++b)
            if ((rep.matrices[a] * rep.matrices[b] - rep.matrices[g.mul(a, b)]).cwiseAbs().maxCoeff() > 1e-12)
                fail("homomorphism fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    const double norm2 = rep.character().squaredNorm();
    if (std::abs(norm2 - n) > 1e-10 * n) {
        std::ostringstream os;
        os << "not irreducible (sum |chi|^2 = " << norm2 << ", |G| = " << n << ")";
        fail(os.str());
    }
}

void validate_dual(const FiniteGroup& g, const DualList& dual) {
    int total = 0;
    for (const auto& r : dual) {
        validate_irrep(g, r);
        total += r.dim * r.dim;
    }
    for (std::size_t a = 0; a < dual.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            const Complex overlap = dual[b].character().dot(dual[a].character()) / static_cast<double>(g.order());
            if (std::abs(overlap) > 1e-10)
                throw ValidationError("dual of " + g.name() + ": irreps '" + dual[a].label + "' and '" + dual[b].label +
                                      "' are equivalent");
        }
    if (total != g.order()) {
        std::ostringstream os;
        os << "dual of " << g.name() << " incomplete: sum d^2 = " << total << ", |G| = " << g.order();
        throw ValidationError(os.str());
    }
}

int conjugate_irrep(const DualList& dual, int k) {
    const CVector target = dual[k].character().conjugate();
    for (std::size_t j = 0; j < dual.size(); ++j)
        if ((dual[j].character() - target).cwiseAbs().maxCoeff() < 1e-10) return static_cast<int>(j);
    throw ValidationError("dual list not closed under conjugation");
}

DualList cyclic_dual(const FiniteGroup& g) {
    const int n = g.order();
    int gen = -1;
    std::vector<int> power_of(n, -1);
    for (int c = 0; c < n && gen < 0; ++c) {
        std::vector<int> seen(n, -1);
        int x = g.identity();
        int k = 0;
        while (seen[x] < 0) {
            seen[x] = k++;
            x = g.mul(x, c);
        }
        if (k == n) {
            gen = c;
            power_of = seen;
        }
    }
    if (gen < 0) throw ValidationError("cyclic_dual: group " + g.name() + " is not cyclic");
    DualList dual;
    for (int m = 0; m < n; ++m) {
        Irrep r;
        r.label = "w" + std::to_string(m);
        r.dim = 1;
        for (int a = 0; a < n; ++a)
            r.matrices.push_back(CMatrix::Constant(1, 1, std::polar(1.0, 2.0 * std::numbers::pi * power_of[a] * m / n)));
        dual.push_back(std::move(r));
    }
    return dual;
}

}  // namespace rieffel::groups
