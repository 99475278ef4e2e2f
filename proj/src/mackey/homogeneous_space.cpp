#include "rieffel/mackey/homogeneous_space.hpp"

#include <algorithm>
#include <string>

#include "rieffel/error.hpp"

namespace rieffel::mackey {

HomogeneousSpace::HomogeneousSpace(FiniteGroup ambient, std::vector<int> subgroup)
    : ambient_(std::move(ambient)), elements_(std::move(subgroup)) {
    const int n = ambient_.order();
    std::vector<int> local(n, -1);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        const int e = elements_[k];
        if (e < 0 || e >= n) throw ValidationError("homogeneous space: subgroup index " + std::to_string(e) + " out of range");
        if (local[e] >= 0) throw ValidationError("homogeneous space: repeated subgroup index " + std::to_string(e));
        local[e] = static_cast<int>(k);
    }
    if (local[ambient_.identity()] < 0) throw ValidationError("homogeneous space: subgroup lacks the identity");
    // identity first, the rest in ambient order
    std::sort(elements_.begin(), elements_.end());
    std::stable_partition(elements_.begin(), elements_.end(), [&](int e) { return e == ambient_.identity(); });
    for (std::size_t k = 0; k < elements_.size(); ++k) local[elements_[k]] = static_cast<int>(k);

    const int m = static_cast<int>(elements_.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int c = ambient_.mul(elements_[a], elements_[b]);
            if (local[c] < 0)
                throw ValidationError("homogeneous space: subgroup not closed (" + std::to_string(elements_[a]) + " * " +
                                      std::to_string(elements_[b]) + " = " + std::to_string(c) + ")");
            table[a][b] = local[c];
        }
    subgroup_ = FiniteGroup(ambient_.name() + "/sub", std::move(table));

    coset_.assign(n, -1);
    fiber_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        if (coset_[p] >= 0) continue;
        const int c = static_cast<int>(reps_.size());
        reps_.push_back(p);
        for (int k = 0; k < m; ++k) {
            const int pg = ambient_.mul(p, elements_[k]);
            coset_[pg] = c;
            fiber_[pg] = k;
        }
    }
    if (static_cast<int>(reps_.size()) * m != n) throw ValidationError("homogeneous space: cosets do not partition the group");
}

}  // namespace rieffel::mackey
