#include "rieffel/groups/group_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::groups {

namespace {

void require_complete(const DualList& dual, Eigen::Index order) {
    long total = 0;
    for (const auto& r : dual) {
        total += static_cast<long>(r.dim) * r.dim;
        if (static_cast<Eigen::Index>(r.matrices.size()) != order)
            throw ValidationError("irrep '" + r.label + "' does not match the element count");
    }
    if (total != order) {
        std::ostringstream os;
        os << "dual list incomplete: sum d^2 = " << total << ", |G| = " << order;
        throw ValidationError(os.str());
    }
}

}  // namespace

PlancherelBlocks plancherel(const GroupAlgElem& f, const DualList& dual) {
    require_complete(dual, f.size());
    const double inv = 1.0 / static_cast<double>(f.size());
    PlancherelBlocks out;
    out.reserve(dual.size());
    for (const auto& r : dual) {
        CMatrix b = CMatrix::Zero(r.dim, r.dim);
        for (Eigen::Index g = 0; g < f.size(); ++g) b += f(g) * r.matrices[g];
        out.push_back(inv * b);
    }
    return out;
}

GroupAlgElem inverse_plancherel(const PlancherelBlocks& blocks, const DualList& dual) {
    if (blocks.size() != dual.size()) throw ValidationError("inverse_plancherel: block count does not match dual");
    if (dual.empty()) throw ValidationError("inverse_plancherel: empty dual");
    const Eigen::Index n = static_cast<Eigen::Index>(dual.front().matrices.size());
    require_complete(dual, n);
    GroupAlgElem f = GroupAlgElem::Zero(n);
    for (std::size_t k = 0; k < dual.size(); ++k) {
        const auto& r = dual[k];
        if (blocks[k].rows() != r.dim || blocks[k].cols() != r.dim)
            throw ValidationError("inverse_plancherel: block shape mismatch for '" + r.label + "'");
        for (Eigen::Index g = 0; g < n; ++g)
            f(g) += static_cast<double>(r.dim) * (r.matrices[g].adjoint() * blocks[k]).trace();
    }
    return f;
}

GroupAlgElem convolve(const FiniteGroup& g, const GroupAlgElem& f1, const GroupAlgElem& f2) {
    const int n = g.order();
    if (f1.size() != n || f2.size() != n) throw ValidationError("convolve: element size does not match group order");
    GroupAlgElem out = GroupAlgElem::Zero(n);
    // Substituting x = h^-1 g: (f1 * f2)(hx) collects f1(h) f2(x).
    for (int h = 0; h < n; ++h)
        for (int x = 0; x < n; ++x) out(g.mul(h, x)) += f1(h) * f2(x);
    return out / static_cast<double>(n);
}

GroupAlgElem adjoint(const FiniteGroup& g, const GroupAlgElem& f) {
    if (f.size() != g.order()) throw ValidationError("adjoint: element size does not match group order");
    GroupAlgElem out(f.size());
    for (int a = 0; a < g.order(); ++a) out(a) = std::conj(f(g.inverse(a)));
    return out;
}

double cstar_norm(const GroupAlgElem& f, const DualList& dual) {
    double best = 0.0;
    for (const auto& b : plancherel(f, dual)) best = std::max(best, numerics::operator_norm(b));
    return best;
}

GroupAlgElem point_mass(const FiniteGroup& g, int element) {
    GroupAlgElem f = GroupAlgElem::Zero(g.order());
    f(element) = static_cast<double>(g.order());
    return f;
}

}  // namespace rieffel::groups
