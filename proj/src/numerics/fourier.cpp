#include "rieffel/numerics/fourier.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include <fftw3.h>

#include "rieffel/error.hpp"

namespace rieffel::numerics {

namespace {

using std::numbers::pi;

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex mu;
    return mu;
}

// In-place 2D DFT on a row-major buffer; sign is FFTW_FORWARD (-1) or FFTW_BACKWARD (+1).
void dft_2d(std::vector<Complex>& buf, int nx, int ny, int sign) {
    auto* data = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_2d(nx, ny, data, data, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
}

double dual_origin(Eigen::Index n, double d) { return -static_cast<double>(n / 2) * 2.0 * pi / (static_cast<double>(n) * d); }

}  // namespace

void ComplexGrid2D::validate() const {
    std::ostringstream os;
    if (nx() < 8 || ny() < 8) os << "grid extents must be >= 8 (got " << nx() << "x" << ny() << ")";
    else if (!(dx > 0) || !(dy > 0) || !std::isfinite(dx) || !std::isfinite(dy)) os << "grid spacing must be positive";
    else if (!values.allFinite()) os << "grid contains non-finite samples";
    if (!os.str().empty()) throw ValidationError("ComplexGrid2D: " + os.str());
}

// With p_k = p_0 + k dp, x_i = x0 + i dx and dp dx = 2 pi / n:
//   exp(i p_k x_i) = exp(i p_k x0) exp(i p_0 i dx) exp(2 pi i k i / n),
// so a modulated DFT with the + sign gives the analysis sum.
MomentumGrid2D analysis_transform(const ComplexGrid2D& grid) {
    grid.validate();
    const int nx = static_cast<int>(grid.nx());
    const int ny = static_cast<int>(grid.ny());
    MomentumGrid2D out;
    out.dpx = 2.0 * pi / (nx * grid.dx);
    out.dpy = 2.0 * pi / (ny * grid.dy);
    out.px0 = dual_origin(nx, grid.dx);
    out.py0 = dual_origin(ny, grid.dy);
    out.x0 = grid.x0;
    out.y0 = grid.y0;
    out.dx = grid.dx;
    out.dy = grid.dy;

    std::vector<Complex> buf(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i) {
        const Complex mx = std::polar(1.0, out.px0 * i * grid.dx);
        for (int j = 0; j < ny; ++j) {
            const Complex my = std::polar(1.0, out.py0 * j * grid.dy);
            buf[static_cast<std::size_t>(i) * ny + j] = grid.values(i, j) * mx * my;
        }
    }
    dft_2d(buf, nx, ny, FFTW_BACKWARD);

    out.values.resize(nx, ny);
    const double w = grid.dx * grid.dy;
    for (int k = 0; k < nx; ++k) {
        const Complex ox = std::polar(1.0, out.px(k) * grid.x0);
        for (int l = 0; l < ny; ++l) {
            const Complex oy = std::polar(1.0, out.py(l) * grid.y0);
            out.values(k, l) = w * ox * oy * buf[static_cast<std::size_t>(k) * ny + l];
        }
    }
    return out;
}

ComplexGrid2D synthesis_transform(const MomentumGrid2D& m) {
    const int nx = static_cast<int>(m.nx());
    const int ny = static_cast<int>(m.ny());
    if (nx < 8 || ny < 8) throw ValidationError("synthesis_transform: momentum grid extents must be >= 8");

    std::vector<Complex> buf(static_cast<std::size_t>(nx) * ny);
    for (int k = 0; k < nx; ++k) {
        const Complex ox = std::polar(1.0, -m.px(k) * m.x0);
        for (int l = 0; l < ny; ++l) {
            const Complex oy = std::polar(1.0, -m.py(l) * m.y0);
            buf[static_cast<std::size_t>(k) * ny + l] = m.values(k, l) * ox * oy;
        }
    }
    dft_2d(buf, nx, ny, FFTW_FORWARD);

    ComplexGrid2D out;
    out.x0 = m.x0;
    out.y0 = m.y0;
    out.dx = m.dx;
    out.dy = m.dy;
    out.values.resize(nx, ny);
    const double w = m.dpx * m.dpy / (4.0 * pi * pi);
    for (int i = 0; i < nx; ++i) {
        const Complex mx = std::polar(1.0, -m.px0 * i * m.dx);
        for (int j = 0; j < ny; ++j) {
            const Complex my = std::polar(1.0, -m.py0 * j * m.dy);
            out.values(i, j) = w * mx * my * buf[static_cast<std::size_t>(i) * ny + j];
        }
    }
    return out;
}

Complex momentum_value(const ComplexGrid2D& grid, double px, double py) {
    const double p[1] = {px};
    const double q[1] = {py};
    return momentum_table(grid, p, q)(0, 0);
}

CMatrix momentum_table(const ComplexGrid2D& grid, std::span<const double> px, std::span<const double> py) {
    const Eigen::Index nx = grid.nx(), ny = grid.ny();
    CMatrix ex(static_cast<Eigen::Index>(px.size()), nx);
    for (Eigen::Index a = 0; a < ex.rows(); ++a)
        for (Eigen::Index i = 0; i < nx; ++i) ex(a, i) = std::polar(grid.dx, px[a] * grid.x(i));
    CMatrix ey(ny, static_cast<Eigen::Index>(py.size()));
    for (Eigen::Index j = 0; j < ny; ++j)
        for (Eigen::Index b = 0; b < ey.cols(); ++b) ey(j, b) = std::polar(grid.dy, py[b] * grid.y(j));
    CMatrix partial = ex * grid.values;
    return partial * ey;
}

CMatrix y_transform(const ComplexGrid2D& grid, std::span<const double> p) {
    CMatrix ey(grid.ny(), static_cast<Eigen::Index>(p.size()));
    for (Eigen::Index j = 0; j < grid.ny(); ++j)
        for (Eigen::Index b = 0; b < ey.cols(); ++b) ey(j, b) = std::polar(grid.dy, p[b] * grid.y(j));
    return grid.values * ey;
}

}  // namespace rieffel::numerics
