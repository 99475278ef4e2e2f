#include "rieffel/numerics/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "rieffel/error.hpp"

namespace rieffel::numerics {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Distinct values in first-seen order must form a uniform progression.
double uniform_step(const std::vector<double>& v, const char* axis) {
    if (v.size() < 2) throw ValidationError(std::string("grid csv: axis ") + axis + " has fewer than 2 points");
    const double step = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
    if (!(step > 0)) throw ValidationError(std::string("grid csv: axis ") + axis + " is not increasing");
    for (std::size_t k = 1; k < v.size(); ++k) {
        const double d = v[k] - v[k - 1];
        if (std::abs(d - step) > 1e-12 * std::max(std::abs(step), std::abs(v[k]))) {
            std::ostringstream os;
            os << "grid csv: axis " << axis << " spacing not uniform at index " << k << " (" << d << " vs " << step << ")";
            throw ValidationError(os.str());
        }
    }
    return step;
}

}  // namespace

void write_grid_csv(std::ostream& os, const ComplexGrid2D& grid) {
    os << "x,y,re,im\n";
    for (Eigen::Index i = 0; i < grid.nx(); ++i)
        for (Eigen::Index j = 0; j < grid.ny(); ++j) {
            const Complex v = grid.values(i, j);
            os << fmt17(grid.x(i)) << ',' << fmt17(grid.y(j)) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
        }
}

void write_grid_csv(const std::string& path, const ComplexGrid2D& grid) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open " + path + " for writing");
    write_grid_csv(f, grid);
}

ComplexGrid2D read_grid_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("grid csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y,re,im") throw ValidationError("grid csv: expected header x,y,re,im, got '" + line + "'");

    struct Row {
        double x, y, re, im;
    };
    std::vector<Row> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        Row r{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r.x, &r.y, &r.re, &r.im) != 4)
            throw ValidationError("grid csv: malformed line " + std::to_string(lineno));
        rows.push_back(r);
    }
    if (rows.empty()) throw ValidationError("grid csv: no samples");

    std::vector<double> ys;
    for (const auto& r : rows) {
        if (r.x != rows.front().x) break;
        ys.push_back(r.y);
    }
    const std::size_t ny = ys.size();
    if (rows.size() % ny != 0) throw ValidationError("grid csv: ragged layout");
    const std::size_t nx = rows.size() / ny;
    std::vector<double> xs(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        xs[i] = rows[i * ny].x;
        for (std::size_t j = 0; j < ny; ++j) {
            const Row& r = rows[i * ny + j];
            if (r.x != xs[i] || r.y != ys[j]) throw ValidationError("grid csv: rows not in x-outer, y-inner order");
        }
    }

    ComplexGrid2D g;
    g.x0 = xs.front();
    g.y0 = ys.front();
    g.dx = uniform_step(xs, "x");
    g.dy = uniform_step(ys, "y");
    g.values.resize(static_cast<Eigen::Index>(nx), static_cast<Eigen::Index>(ny));
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            const Row& r = rows[i * ny + j];
            g.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(r.re, r.im);
        }
    g.validate();
    return g;
}

ComplexGrid2D read_grid_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open grid file " + path);
    return read_grid_csv(f);
}

}  // namespace rieffel::numerics
