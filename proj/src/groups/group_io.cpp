#include "rieffel/groups/group_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::groups {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next non-blank line with comments stripped; false at end of input.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(is_, line)) {
            ++lineno_;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            const auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            const auto e = line.find_last_not_of(" \t\r");
            out = line.substr(b, e - b + 1);
            return true;
        }
        return false;
    }

    std::string require(const char* what) {
        std::string s;
        if (!next(s)) fail(std::string("unexpected end of file, expected ") + what);
        return s;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("group file line " + std::to_string(lineno_) + ": " + why);
    }

private:
    std::istream& is_;
    int lineno_ = 0;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

GroupData read_group(std::istream& is) {
    LineReader in(is);
    std::string name, word;
    {
        std::istringstream ls(in.require("'group NAME'"));
        if (!(ls >> word >> name) || word != "group") in.fail("expected 'group NAME'");
    }
    int order = 0;
    {
        std::istringstream ls(in.require("'order N'"));
        if (!(ls >> word >> order) || word != "order" || order <= 0) in.fail("expected 'order N' with N > 0");
    }
    if (in.require("'table'") != "table") in.fail("expected 'table'");
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        std::istringstream ls(in.require("table row"));
        for (int b = 0; b < order; ++b)
            if (!(ls >> table[a][b])) in.fail("table row " + std::to_string(a) + " too short");
        if (ls >> word) in.fail("table row " + std::to_string(a) + " too long");
    }

    GroupData data;
    data.group = FiniteGroup(name, std::move(table));
    for (;;) {
        const std::string line = in.require("'irrep', 'subgroup' or 'end'");
        std::istringstream ls(line);
        ls >> word;
        if (word == "end") break;
        if (word == "subgroup") {
            NamedSubgroup s;
            if (!(ls >> s.label)) in.fail("expected 'subgroup LABEL i1 i2 ...'");
            int idx;
            while (ls >> idx) {
                if (idx < 0 || idx >= order) in.fail("subgroup index out of range");
                s.elements.push_back(idx);
            }
            data.subgroups.push_back(std::move(s));
            continue;
        }
        if (word != "irrep") in.fail("unknown directive '" + word + "'");
        Irrep r;
        if (!(ls >> r.label >> r.dim) || r.dim <= 0) in.fail("expected 'irrep LABEL DIM'");
        for (int g = 0; g < order; ++g) {
            std::istringstream ms(in.require("irrep matrix row"));
            CMatrix m(r.dim, r.dim);
            for (int i = 0; i < r.dim; ++i)
                for (int j = 0; j < r.dim; ++j) {
                    double re, im;
                    if (!(ms >> re >> im)) in.fail("irrep '" + r.label + "' matrix " + std::to_string(g) + " too short");
                    m(i, j) = Complex(re, im);
                }
            r.matrices.push_back(std::move(m));
        }
        data.dual.push_back(std::move(r));
    }
    validate_dual(data.group, data.dual);
    return data;
}

GroupData read_group_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open group file " + path);
    return read_group(f);
}

void write_group(std::ostream& os, const GroupData& data) {
    const FiniteGroup& g = data.group;
    os << "group " << g.name() << "\norder " << g.order() << "\ntable\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
        os << '\n';
    }
    for (const auto& r : data.dual) {
        os << "irrep " << r.label << ' ' << r.dim << '\n';
        for (const auto& m : r.matrices) {
            bool first = true;
            for (int i = 0; i < r.dim; ++i)
                for (int j = 0; j < r.dim; ++j) {
                    os << (first ? "" : " ") << fmt17(m(i, j).real()) << ' ' << fmt17(m(i, j).imag());
                    first = false;
                }
            os << '\n';
        }
    }
    for (const auto& s : data.subgroups) {
        os << "subgroup " << s.label;
        for (int e : s.elements) os << ' ' << e;
        os << '\n';
    }
    os << "end\n";
}

void write_group_file(const std::string& path, const GroupData& data) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open " + path + " for writing");
    write_group(f, data);
}

}  // namespace rieffel::groups
