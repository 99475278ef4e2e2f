#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "rieffel/error.hpp"
#include "rieffel/numerics/fourier.hpp"
#include "rieffel/numerics/grid_io.hpp"
#include "rieffel/numerics/linalg.hpp"
#include "rieffel/numerics/quadrature.hpp"
#include "rieffel/numerics/special_functions.hpp"

using namespace rieffel;
using namespace rieffel::numerics;

namespace {

// 20-digit reference values of K_{i nu}(x) and (J_{i nu} + J_{-i nu})(x).
struct Ref {
    double nu, x, value;
};
const Ref kK[] = {{0, 1, 0.42102443824070833334},           {0, 2, 0.11389387274953343565},
                  {2, 0.5, 0.016502018949481442656},        {1, 1, 0.28942803702599212763},
                  {1, 10, 1.6950735948481493804e-5},        {5, 3, 3.7941674688920078869e-4},
                  {20, 10, -4.9508444413020093005e-15},     {20, 25, 8.4959103282221635992e-16},
                  {0.5, 30, 2.1237528932394136301e-14},     {10, 0.01, -8.673792898139277502e-8}};
const Ref kD[] = {{0, 1, 1.5303953731159331029},       {0.25, 5, -0.38677697930012473855},
                  {0.5, 15, -0.033148513805190661715}, {1, 20, 0.84524860913523038357},
                  {1, 40, 0.044856441364200968095},    {5, 10, -78.111141151503623614},
                  {5, 50, 76.686410185430782386},      {20, 5, -7719156742163.3264906},
                  {20, 50, 1365934850647.9040943},     {10, 0.05, 1524498.5060957866547},
                  {0.5, 200, -0.040986924371646651897}};

// K_0 by its power-log series: K_0(x) = -(ln(x/2) + gamma) I_0(x) + sum (x^2/4)^k / (k!)^2 H_k.
double k0_series(double x) {
    double term = 1.0, h = 0.0, i0 = 1.0, rest = 0.0;
    for (int k = 1; k < 40; ++k) {
        term *= (x * x / 4) / (k * k);
        h += 1.0 / k;
        i0 += term;
        rest += term * h;
    }
    return -(std::log(x / 2) + std::numbers::egamma) * i0 + rest;
}

}  // namespace

TEST_SUITE("numerics") {
    TEST_CASE("K_{i nu} against reference values") {
        for (const auto& r : kK) CHECK(std::abs(macdonald_imag(r.nu, r.x) - r.value) <= 1e-9 * std::abs(r.value));
    }

    TEST_CASE("K_0 against the power-log series") {
        for (double x : {0.1, 0.5, 1.0, 2.0}) CHECK(macdonald_imag(0, x) == doctest::Approx(k0_series(x)).epsilon(1e-12));
    }

    TEST_CASE("K_{i nu} domain errors") {
        CHECK_THROWS_AS(macdonald_imag(1, 0.0), DomainError);
        CHECK_THROWS_AS(macdonald_imag(1, -1.0), DomainError);
        CHECK_THROWS_AS(macdonald_imag(1, 1e-7), DomainError);
    }

    TEST_CASE("series and quadrature agree where both apply") {
        for (double nu : {0.5, 2.0, 5.0})
            for (double x : {0.05, 0.5, 1.5}) CHECK(macdonald_imag_series(nu, x) == doctest::Approx(macdonald_imag(nu, x)).epsilon(1e-9));
    }

    TEST_CASE("J_{i nu} + J_{-i nu} against reference values") {
        for (const auto& r : kD) CHECK(std::abs(bessel_imag_sum(r.nu, r.x) - r.value) <= 1e-8 * std::abs(r.value));
        CHECK(bessel_imag_sum(0, 1e-8) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK_THROWS_AS(bessel_imag_sum(1, 0.0), DomainError);
    }

    TEST_CASE("J sum continuous across the method switches") {
        for (double nu : {0.0, 1.0, 3.0}) {
            const double a = 2.0, b = 30.0 + nu * nu;
            for (double x : {a, b}) CHECK(bessel_imag_sum(nu, x * (1 - 1e-9)) == doctest::Approx(bessel_imag_sum(nu, x * (1 + 1e-9))).epsilon(1e-7));
        }
    }

    TEST_CASE("large-x amplitude of the J sum") {
        // amplitude of 2 sqrt(2/(pi x)) cosh(pi nu/2) cos(x - pi/4)
        double amp = 0.0;
        for (int k = 0; k <= 2000; ++k) {
            const double x = 20.0 + 5.0 * k / 2000;
            amp = std::max(amp, std::abs(bessel_imag_sum(1, x)) * std::sqrt(x / 20.0));
        }
        const double expected = 2 * std::sqrt(2 / (std::numbers::pi * 20.0)) * std::cosh(std::numbers::pi / 2);
        CHECK(amp == doctest::Approx(expected).epsilon(0.02));
    }

    TEST_CASE("adaptive quadrature") {
        CHECK(adaptive_quad([](double x) { return Complex(x); }, 0, 1, 1e-14).value.real() == doctest::Approx(0.5).epsilon(1e-14));
        const auto inf = std::numeric_limits<double>::infinity();
        CHECK(std::abs(adaptive_quad([](double x) { return Complex(std::exp(-x)); }, 0, inf, 1e-12).value - 1.0) < 1e-12);
        CHECK(std::abs(adaptive_quad([](double t) { return Complex(std::exp(-std::cosh(t))); }, 0, inf, 1e-12).value.real() -
                       0.42102443824070833334) < 1e-11);
        QuadratureOptions o;
        o.max_intervals = 3;
        CHECK_THROWS_AS(adaptive_quad([](double x) { return Complex(1.0 / std::sqrt(std::abs(x - 0.3))); }, 0, 1, 1e-14, o),
                        ConvergenceError);
    }

    TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
        const auto& r = gauss_legendre(8);
        double s = 0.0;
        for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * std::pow(r.nodes[k], 14);
        CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
    }

    TEST_CASE("null spaces") {
        CHECK(nullspace_basis(GramForm(CMatrix::Identity(4, 4))).null_basis.cols() == 0);
        CMatrix d = CMatrix::Zero(2, 2);
        d(0, 0) = 1.0;
        const auto s = nullspace_basis(GramForm(d));
        REQUIRE(s.null_basis.cols() == 1);
        CHECK(std::abs(s.null_basis(1, 0)) == doctest::Approx(1.0));
        std::mt19937_64 rng(1);
        std::normal_distribution<double> nd;
        CVector v(6);
        for (auto& c : v) c = Complex(nd(rng), nd(rng));
        const GramForm g(v * v.adjoint());
        const auto r = nullspace_basis(g);
        CHECK(r.null_basis.cols() == 5);
        CHECK((g.matrix() * r.null_basis).cwiseAbs().maxCoeff() < 1e-10);
        CHECK_THROWS_AS(nullspace_basis(GramForm(-CMatrix::Identity(2, 2))), NotPositiveError);
        CMatrix nh = CMatrix::Zero(2, 2);
        nh(0, 1) = 1.0;
        CHECK_THROWS_AS(GramForm{nh}, ValidationError);
    }

    TEST_CASE("complement reproduces the form") {
        std::mt19937_64 rng(2);
        std::normal_distribution<double> nd;
        CMatrix b(5, 3);
        for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = Complex(nd(rng), nd(rng));
        const GramForm g(b * b.adjoint());
        const auto s = nullspace_basis(g);
        for (Eigen::Index i = 0; i < s.complement_basis.cols(); ++i)
            for (Eigen::Index j = 0; j < s.complement_basis.cols(); ++j) {
                const Complex q = i == j ? Complex(s.complement_eigenvalues(i)) : Complex(0.0);
                CHECK(std::abs(g(s.complement_basis.col(i), s.complement_basis.col(j)) - q) < 1e-12 * s.eigenvalues.maxCoeff());
            }
    }

    TEST_CASE("Fourier transform of a delta and a Gaussian") {
        ComplexGrid2D g = ComplexGrid2D::sample([](double, double) { return Complex(0.0); }, -4, 4, 17, -4, 4, 17);
        g.values(8, 8) = 1.0 / (g.dx * g.dy);
        const auto m = analysis_transform(g);
        CHECK((m.values.array() - 1.0).abs().maxCoeff() < 1e-12);

        const auto gauss = ComplexGrid2D::sample([](double x, double y) { return Complex(std::exp(-0.5 * (x * x + y * y))); }, -12,
                                                 12, 256, -12, 12, 256);
        for (double p : {0.0, 1.0, 2.5}) {
            const double exact = 2 * std::numbers::pi * std::exp(-0.5 * p * p);
            CHECK(std::abs(momentum_value(gauss, p, 0.0) - exact) < 1e-6 * exact);
        }
    }

    TEST_CASE("synthesis inverts analysis on random grids") {
        std::mt19937_64 rng(3);
        std::normal_distribution<double> nd;
        auto g = ComplexGrid2D::sample([&](double, double) { return Complex(nd(rng), nd(rng)); }, -1, 2, 24, 0, 5, 30);
        const auto back = synthesis_transform(analysis_transform(g));
        CHECK((back.values - g.values).cwiseAbs().maxCoeff() < 1e-10 * g.values.cwiseAbs().maxCoeff());
        std::vector<double> px = {0.3, -1.1}, py = {0.7};
        const CMatrix t = momentum_table(g, px, py);
        CHECK(std::abs(t(1, 0) - momentum_value(g, -1.1, 0.7)) < 1e-12 * std::abs(t(1, 0)));
    }

    TEST_CASE("grid CSV round trip and validation") {
        auto g = ComplexGrid2D::sample([](double x, double y) { return Complex(x, y / 3.0); }, -1, 1, 9, 0, 2, 8);
        std::stringstream ss;
        write_grid_csv(ss, g);
        const auto r = read_grid_csv(ss);
        CHECK(r.values == g.values);
        CHECK(r.dx == g.dx);
        std::stringstream bad("x,y,re\n0,0,1\n");
        CHECK_THROWS_AS(read_grid_csv(bad), ValidationError);
        std::stringstream uneven("x,y,re,im\n0,0,1,0\n0,1,1,0\n0,3,1,0\n");
        CHECK_THROWS_AS(read_grid_csv(uneven), ValidationError);
    }

    TEST_CASE("pairwise sums do not depend on chunking") {
        std::vector<double> v(1000);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = 1.0 / (k + 1.0);
        CHECK(pairwise_sum(v) == doctest::Approx(7.485470860550345).epsilon(1e-14));
    }
}
