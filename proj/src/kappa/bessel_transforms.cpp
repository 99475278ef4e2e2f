#include "rieffel/kappa/bessel_transforms.hpp"

#include <cmath>
#include <numbers>

#include "rieffel/error.hpp"
#include "rieffel/numerics/quadrature.hpp"
#include "rieffel/numerics/special_functions.hpp"

namespace rieffel::kappa {

namespace {

using std::numbers::pi;

double zvar(double x) { return 0.5 * std::exp(2.0 * x); }

// K_{i nu}(z) over the whole range the profiles need.
double macdonald(double nu, double z) {
    if (nu > 0 && z < 0.1) return numerics::macdonald_imag_series(nu, z);
    if (z < 1e-6) return -std::log(0.5 * z) - std::numbers::egamma;  // nu = 0
    return numerics::macdonald_imag(nu, z);
}

Complex plane_wave(double p, double y) { return std::polar(1.0, -p * y); }

// Phi(s, i) = kappa1_profile(sigma_s, x0 + i dx).
Eigen::MatrixXd profile_matrix(const std::vector<double>& sigma, double x0, double dx, Eigen::Index nx) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(sigma.size()), nx);
    for (Eigen::Index s = 0; s < m.rows(); ++s)
        for (Eigen::Index i = 0; i < nx; ++i) m(s, i) = kappa1_profile(sigma[s], x0 + static_cast<double>(i) * dx);
    return m;
}

PSection pair_with_profile(const ComplexGrid2D& psi, std::span<const double> p, double (*profile)(double, double)) {
    psi.validate();
    const CMatrix yhat = numerics::y_transform(psi, p);
    PSection out{std::vector<double>(p.begin(), p.end()), CVector::Zero(static_cast<Eigen::Index>(p.size()))};
    for (Eigen::Index b = 0; b < yhat.cols(); ++b) {
        Complex s = 0.0;
        for (Eigen::Index i = 0; i < psi.nx(); ++i) s += profile(p[b], psi.x(i)) * yhat(i, b);
        out.values(b) = s * psi.dx;
    }
    return out;
}

}  // namespace

double kappa1_profile(double sigma, double x) {
    if (sigma < 0) throw DomainError("kappa1_profile: sigma must be non-negative");
    const double nu = std::sqrt(sigma);
    return std::sqrt(2.0 * std::sinh(pi * nu)) / pi * macdonald(nu, zvar(x));
}

Complex kappa1_eigfun(double sigma, double p, double x, double y) { return kappa1_profile(sigma, x) * plane_wave(p, y); }

double kappa1_constraint_profile(double p, double x) {
    const double nu = 0.5 * std::abs(p);
    if (nu == 0) return 0.0;
    return std::sqrt(2.0 * std::sinh(pi * nu) / pi) * macdonald(nu, zvar(x));
}

Complex kappa1_constraint_eigfun(double p, double x, double y) {
    return kappa1_constraint_profile(p, x) * plane_wave(p, y);
}

double kappa_m1_profile(double sigma, double x) {
    if (!(sigma > 0)) throw DomainError("kappa_m1_profile: sigma must be positive");
    const double nu = std::sqrt(sigma);
    return 0.5 * std::sqrt(2.0 / std::sinh(pi * nu)) * numerics::bessel_imag_sum(nu, zvar(x));
}

Complex kappa_m1_eigfun(double sigma, double p, double x, double y) {
    return kappa_m1_profile(sigma, x) * plane_wave(p, y);
}

double kappa_m1_constraint_profile(double p, double x) {
    const double nu = 0.5 * std::abs(p);
    if (nu == 0) throw DomainError("kappa_m1_constraint_profile: p = 0 is excluded");
    return 0.5 * std::sqrt(2.0 * pi / std::sinh(pi * nu)) * numerics::bessel_imag_sum(nu, zvar(x));
}

Complex kappa_m1_constraint_eigfun(double p, double x, double y) {
    return kappa_m1_constraint_profile(p, x) * plane_wave(p, y);
}

PSection kappa1_vmap(const ComplexGrid2D& psi, std::span<const double> p) {
    return pair_with_profile(psi, p, kappa1_constraint_profile);
}

PSection kappa_m1_vmap(const ComplexGrid2D& psi, std::span<const double> p) {
    for (double q : p)
        if (q == 0.0) throw DomainError("kappa_m1_vmap: p = 0 is excluded");
    return pair_with_profile(psi, p, kappa_m1_constraint_profile);
}

SpectralGrid make_spectral_grid(double sigma_max, int nu_panels, double p_max, int p_panels, int order) {
    if (!(sigma_max > 0) || !(p_max > 0) || nu_panels < 1 || p_panels < 1)
        throw DomainError("make_spectral_grid: ranges and panel counts must be positive");
    const numerics::GaussRule& r = numerics::gauss_legendre(order);
    SpectralGrid g;
    const double wn = std::sqrt(sigma_max) / nu_panels;
    for (int k = 0; k < nu_panels; ++k)
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            const double nu = (k + 0.5) * wn + 0.5 * wn * r.nodes[j];
            g.sigma.push_back(nu * nu);
            g.sigma_weights.push_back(2.0 * nu * 0.5 * wn * r.weights[j]);
        }
    const double wp = 2.0 * p_max / p_panels;
    for (int k = 0; k < p_panels; ++k)
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            g.p.push_back(-p_max + (k + 0.5) * wp + 0.5 * wp * r.nodes[j]);
            g.p_weights.push_back(0.5 * wp * r.weights[j]);
        }
    return g;
}

SpectralArray kappa1_spectral_transform_yhat(const CMatrix& yhat, double x0, double dx, const SpectralGrid& grid) {
    if (yhat.cols() != static_cast<Eigen::Index>(grid.p.size()))
        throw ValidationError("kappa1_spectral_transform: y transform does not match the p nodes");
    const Eigen::MatrixXd phi = profile_matrix(grid.sigma, x0, dx, yhat.rows());
    return SpectralArray{grid, phi.cast<Complex>() * yhat * dx};
}

SpectralArray kappa1_spectral_transform(const ComplexGrid2D& psi, const SpectralGrid& grid) {
    psi.validate();
    return kappa1_spectral_transform_yhat(numerics::y_transform(psi, grid.p), psi.x0, psi.dx, grid);
}

double spectral_norm2(const SpectralArray& s) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(s.values.size()));
    for (Eigen::Index a = 0; a < s.values.rows(); ++a)
        for (Eigen::Index b = 0; b < s.values.cols(); ++b)
            terms.push_back(s.grid.sigma_weights[a] * s.grid.p_weights[b] * std::norm(s.values(a, b)) / (2.0 * pi));
    return numerics::pairwise_sum(terms);
}

ComplexGrid2D kappa1_inverse_transform(const SpectralArray& s, const ComplexGrid2D& like) {
    const auto& g = s.grid;
    const Eigen::Index ns = s.values.rows(), np = s.values.cols();
    CMatrix weighted = s.values;
    for (Eigen::Index a = 0; a < ns; ++a)
        for (Eigen::Index b = 0; b < np; ++b) weighted(a, b) *= g.sigma_weights[a] * g.p_weights[b];
    const Eigen::MatrixXd phi = profile_matrix(g.sigma, like.x0, like.dx, like.nx());
    CMatrix ey(np, like.ny());
    for (Eigen::Index b = 0; b < np; ++b)
        for (Eigen::Index j = 0; j < like.ny(); ++j) ey(b, j) = plane_wave(g.p[b], like.y(j)) / (2.0 * pi);
    ComplexGrid2D out = like;
    out.values = phi.transpose().cast<Complex>() * weighted * ey;
    return out;
}

double eigen_residual(int kappa, const std::function<Complex(double, double)>& f, double lambda, double x0, double x1,
                      int n, double y, double h) {
    if (kappa < -1 || kappa > 1) throw DomainError("eigen_residual: kappa must be -1, 0 or 1");
    if (n < 2 || !(x1 > x0) || !(h > 0)) throw DomainError("eigen_residual: bad sampling range");
    auto d2 = [&](auto&& g) { return (-g(-2.0) + 16.0 * g(-1.0) - 30.0 * g(0.0) + 16.0 * g(1.0) - g(2.0)) / (12.0 * h * h); };
    double worst = 0.0, scale = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = x0 + (x1 - x0) * k / (n - 1);
        const Complex v = f(x, y);
        const Complex fxx = d2([&](double s) { return f(x + s * h, y); });
        const Complex fyy = d2([&](double s) { return f(x, y + s * h); });
        const Complex pot = kappa * std::exp(4.0 * x) * v;
        const Complex hf = 0.5 * (-fxx + pot + fyy);
        worst = std::max(worst, std::abs(hf - lambda * v));
        scale = std::max(scale, 0.5 * (std::abs(fxx) + std::abs(pot) + std::abs(fyy)) + std::abs(lambda * v));
    }
    if (scale == 0) throw DomainError("eigen_residual: function vanishes on the sample points");
    return worst / scale;
}

CMatrix apply_hamiltonian_yhat(int kappa, const CMatrix& yhat, double x0, double dx, std::span<const double> p) {
    if (kappa < -1 || kappa > 1) throw DomainError("apply_hamiltonian_yhat: kappa must be -1, 0 or 1");
    if (yhat.cols() != static_cast<Eigen::Index>(p.size())) throw ValidationError("apply_hamiltonian_yhat: column count != |p|");
    const Eigen::Index n = yhat.rows();
    // samples beyond the grid are taken as zero
    auto at = [&](Eigen::Index i, Eigen::Index b) { return (i < 0 || i >= n) ? Complex(0.0) : yhat(i, b); };
    CMatrix out(n, yhat.cols());
    for (Eigen::Index b = 0; b < yhat.cols(); ++b)
        for (Eigen::Index i = 0; i < n; ++i) {
            const Complex fxx = (-at(i - 2, b) + 16.0 * at(i - 1, b) - 30.0 * at(i, b) + 16.0 * at(i + 1, b) - at(i + 2, b)) /
                                (12.0 * dx * dx);
            const double x = x0 + static_cast<double>(i) * dx;
            out(i, b) = 0.5 * (-fxx + (kappa * std::exp(4.0 * x) - p[b] * p[b]) * at(i, b));
        }
    return out;
}

ComplexGrid2D kappa1_gaussian_fixture(Eigen::Index nx, Eigen::Index ny, double x0, double x1) {
    ComplexGrid2D g = ComplexGrid2D::sample(
        [](double x, double y) { return Complex(std::exp(-4.0 * ((x + 0.5) * (x + 0.5) + y * y))); }, x0, x1, nx, -10.0, 10.0,
        ny);
    g.values /= std::sqrt(g.values.squaredNorm() * g.dx * g.dy);
    return g;
}

}  // namespace rieffel::kappa
