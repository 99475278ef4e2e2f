#include "rieffel/groups/builtin_groups.hpp"

#include <cmath>
#include <numbers>

#include "rieffel/error.hpp"

namespace rieffel::groups {

namespace {

using std::numbers::pi;

struct IrrepSpec {
    std::string label;
    std::vector<CMatrix> generator_images;
};

struct SubgroupSpec {
    std::string label;
    int generator;  // index into the generator list
};

CMatrix scalar(Complex v) { return CMatrix::Constant(1, 1, v); }

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

int find_matrix(const std::vector<CMatrix>& elems, const CMatrix& m) {
    for (std::size_t k = 0; k < elems.size(); ++k)
        if ((elems[k] - m).cwiseAbs().maxCoeff() < 1e-9) return static_cast<int>(k);
    return -1;
}

GroupData generate(const std::string& name, const std::vector<CMatrix>& gens, const std::vector<IrrepSpec>& irreps,
                   const std::vector<SubgroupSpec>& subgroups) {
    const Eigen::Index d = gens.front().rows();
    std::vector<CMatrix> elems{CMatrix::Identity(d, d)};
    std::vector<int> parent{-1}, via{-1};
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (std::size_t s = 0; s < gens.size(); ++s) {
            CMatrix next = elems[head] * gens[s];
            if (find_matrix(elems, next) >= 0) continue;
            elems.push_back(std::move(next));
            parent.push_back(static_cast<int>(head));
            via.push_back(static_cast<int>(s));
        }
    const int n = static_cast<int>(elems.size());

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            table[a][b] = find_matrix(elems, elems[a] * elems[b]);
            if (table[a][b] < 0) throw ValidationError("builtin group " + name + ": generators do not close");
        }

    GroupData data;
    data.group = FiniteGroup(name, std::move(table));
    for (const auto& spec : irreps) {
        Irrep r;
        r.label = spec.label;
        r.dim = static_cast<int>(spec.generator_images.front().rows());
        r.matrices.resize(n);
        r.matrices[0] = CMatrix::Identity(r.dim, r.dim);
        for (int k = 1; k < n; ++k) r.matrices[k] = r.matrices[parent[k]] * spec.generator_images[via[k]];
        data.dual.push_back(std::move(r));
    }
    validate_dual(data.group, data.dual);

    for (const auto& sub : subgroups) {
        NamedSubgroup s{sub.label, {}};
        const int g = find_matrix(elems, gens[sub.generator]);
        int x = data.group.identity();
        do {
            s.elements.push_back(x);
            x = data.group.mul(x, g);
        } while (x != data.group.identity());
        data.subgroups.push_back(std::move(s));
    }
    return data;
}

GroupData cyclic(const std::string& name, int n) {
    std::vector<IrrepSpec> irreps;
    for (int m = 0; m < n; ++m) irreps.push_back({"w" + std::to_string(m), {scalar(std::polar(1.0, 2.0 * pi * m / n))}});
    return generate(name, {scalar(std::polar(1.0, 2.0 * pi / n))}, irreps, {});
}

}  // namespace

const std::vector<std::string>& builtin_group_names() {
    static const std::vector<std::string> names{"z2", "z3", "z4", "s3", "d4", "q8"};
    return names;
}

GroupData builtin_group(const std::string& name) {
    const Complex one(1.0), i(0.0, 1.0), zero(0.0);
    if (name == "z2") return cyclic(name, 2);
    if (name == "z3") return cyclic(name, 3);
    if (name == "z4") return cyclic(name, 4);
    if (name == "s3") {
        const double c = -0.5, s = std::sqrt(3.0) / 2.0;
        const CMatrix r = mat2(c, -s, s, c);
        const CMatrix f = mat2(one, zero, zero, -one);
        return generate(name, {r, f},
                        {{"trivial", {scalar(1), scalar(1)}}, {"sign", {scalar(1), scalar(-1)}}, {"std", {r, f}}},
                        {{"a3", 0}, {"c2", 1}});
    }
    if (name == "d4") {
        const CMatrix r = mat2(zero, -one, one, zero);
        const CMatrix f = mat2(one, zero, zero, -one);
        return generate(name, {r, f},
                        {{"a1", {scalar(1), scalar(1)}},
                         {"a2", {scalar(1), scalar(-1)}},
                         {"b1", {scalar(-1), scalar(1)}},
                         {"b2", {scalar(-1), scalar(-1)}},
                         {"e", {r, f}}},
                        {{"c4", 0}});
    }
    if (name == "q8") {
        const CMatrix qi = mat2(i, zero, zero, -i);
        const CMatrix qj = mat2(zero, one, -one, zero);
        return generate(name, {qi, qj},
                        {{"trivial", {scalar(1), scalar(1)}},
                         {"chi_i", {scalar(1), scalar(-1)}},
                         {"chi_j", {scalar(-1), scalar(1)}},
                         {"chi_k", {scalar(-1), scalar(-1)}},
                         {"h", {qi, qj}}},
                        {{"c4", 0}});
    }
    throw ValidationError("unknown builtin group '" + name + "' (expected z2, z3, z4, s3, d4 or q8)");
}

}  // namespace rieffel::groups
