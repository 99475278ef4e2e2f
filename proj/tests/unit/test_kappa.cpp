#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rieffel/error.hpp"
#include "rieffel/kappa/bessel_transforms.hpp"
#include "rieffel/kappa/deficiency.hpp"
#include "rieffel/kappa/light_cone.hpp"
#include "rieffel/kappa/time_average.hpp"
#include "rieffel/numerics/fourier.hpp"

using namespace rieffel;
using namespace rieffel::kappa;
using std::numbers::pi;

TEST_SUITE("kappa") {
    TEST_CASE("test functions need a vanishing transform at the origin") {
        const auto g = ComplexGrid2D::sample([](double x, double y) { return Complex(std::exp(-0.5 * (x * x + y * y))); }, -8, 8,
                                             64, -8, 8, 64);
        CHECK_THROWS_AS(make_test_function(g), ValidationError);
        CHECK(make_test_function(cone_gaussian_fixture()).origin_ratio < 1e-10);
    }

    TEST_CASE("restriction to the cone") {
        const auto psi = make_test_function(cone_gaussian_fixture());
        const auto grid = uniform_cone_grid(4.0, 40);
        const auto direct = kappa0_vmap(psi, grid);
        const auto restricted = kappa0_vmap(psi, grid, VmapPath::Restriction);
        for (std::size_t k = 0; k < grid.p.size(); ++k) {
            const auto i = static_cast<Eigen::Index>(k);
            const double p = grid.p[k], v = p * std::exp(-p * p);
            CHECK(std::abs(direct.plus(i) - v) < 1e-10);
            CHECK(std::abs(direct.minus(i) - v) < 1e-10);
            CHECK(std::abs(restricted.plus(i) - direct.plus(i)) < 1e-6 * std::max(std::abs(v), 1e-3));
        }
        const auto off = make_test_function(off_cone_fixture());
        const auto s = kappa0_vmap(off, grid);
        CHECK(s.plus.cwiseAbs().maxCoeff() < 1e-8);
        CHECK(s.minus.cwiseAbs().maxCoeff() < 1e-8);
    }

    TEST_CASE("kappa = 0 inner product") {
        const auto psi = make_test_function(cone_gaussian_fixture());
        CHECK(std::abs(kappa0_inner(psi, psi) - 1.0 / (4 * pi)) < 1e-6);
        CHECK(std::abs(kappa0_inner(psi, make_test_function(off_cone_fixture()))) < 1e-8);
        for (unsigned seed = 1; seed <= 3; ++seed) {
            const auto a = make_test_function(random_cone_test_grid(seed)), b = make_test_function(random_cone_test_grid(seed + 10));
            CHECK(kappa0_inner(a, a).real() >= -1e-10);
            CHECK(std::abs(kappa0_inner(a, b) - std::conj(kappa0_inner(b, a))) < 1e-12);
        }
    }

    TEST_CASE("time average") {
        const auto psi = make_test_function(cone_gaussian_fixture());
        const Kappa0TimeAverage avg(psi, psi);
        CHECK(avg(0.0) == Complex(0.0));
        CHECK_THROWS_AS(avg(-1.0), DomainError);
        const double exact = 1.0 / (4 * pi);
        const double e50 = std::abs(avg(50).real() - exact), e100 = std::abs(avg(100).real() - exact);
        CHECK(e100 < e50);
        CHECK(e100 < 1e-2 * exact);
        // a bump off the cone averages to zero
        const auto off = make_test_function(off_cone_fixture());
        const Kappa0TimeAverage o(off, off);
        CHECK(std::abs(o(20.0)) < 0.1 * std::abs(o(1.0)));
    }

    TEST_CASE("cone observables") {
        const auto grid = uniform_cone_grid(6.0, 200);
        LightConeSection s{grid, CVector(grid.p.size()), CVector::Zero(grid.p.size())};
        for (std::size_t k = 0; k < grid.p.size(); ++k) s.plus(static_cast<Eigen::Index>(k)) = std::exp(-grid.p[k] * grid.p[k]);
        const auto a1 = kappa0_induced_observable(ConeObservable::A1, s);
        for (std::size_t k = 0; k < grid.p.size(); ++k) {
            const double p = grid.p[k];
            CHECK(std::abs(a1.plus(static_cast<Eigen::Index>(k)) - p * std::exp(-p * p)) < 1e-14);
        }
        CHECK(a1.minus.cwiseAbs().maxCoeff() == 0.0);
        const auto a3 = kappa0_induced_observable(ConeObservable::A3, s);
        // A3 = -i p d/dp on the + component
        for (std::size_t k = 10; k + 10 < grid.p.size(); ++k) {
            const double p = grid.p[k];
            CHECK(std::abs(a3.plus(static_cast<Eigen::Index>(k)) - Complex(0, 2 * p * p * std::exp(-p * p))) < 1e-6);
        }
        LightConeSection wide{grid, CVector::Ones(grid.p.size()), CVector::Zero(grid.p.size())};
        CHECK_THROWS_AS(kappa0_induced_observable(ConeObservable::A3, wide), DomainError);
    }

    TEST_CASE("kappa = 1 eigenfunctions") {
        const double r = eigen_residual(1, [](double x, double y) { return kappa1_eigfun(1.0, 1.0, x, y); }, 1.5, -2.0, 1.0, 31, 0.2);
        CHECK(r < 1e-5);
        CHECK(eigen_residual(1, [](double x, double y) { return kappa1_constraint_eigfun(1.0, x, y); }, 0.0, -6, 1.5, 31, 0.2) < 1e-5);
        // wrong eigenvalue is detected
        CHECK(eigen_residual(1, [](double x, double y) { return kappa1_eigfun(1.0, 1.0, x, y); }, 2.5, -2.0, 1.0, 31, 0.2) > 1e-2);
        CHECK(kappa1_constraint_profile(0.0, 0.3) == 0.0);
        CHECK_THROWS_AS(kappa1_profile(-1.0, 0.0), DomainError);
    }

    TEST_CASE("kappa = 1 pairing") {
        std::vector<double> p = {-1.0, -0.5, 0.5, 1.0};
        const auto even = ComplexGrid2D::sample([](double x, double y) { return Complex(std::exp(-(x + 1) * (x + 1) - y * y)); }, -8,
                                                3, 200, -8, 8, 128);
        const auto v = kappa1_vmap(even, p);
        CHECK(std::abs(v.values(0) - std::conj(v.values(3))) < 1e-8);
        const auto far = ComplexGrid2D::sample(
            [](double x, double y) { return Complex(std::exp(-20 * (x - 3.5) * (x - 3.5) - y * y)); }, 3, 4, 64, -8, 8, 128);
        const double norm = std::sqrt(far.values.squaredNorm() * far.dx * far.dy);
        CHECK(kappa1_vmap(far, p).values.cwiseAbs().maxCoeff() < 1e-6 * norm);
        auto sum = even;
        sum.values = 2.0 * even.values + Complex(0, 1) * even.values.cwiseAbs2().cast<Complex>();
        auto sq = even;
        sq.values = even.values.cwiseAbs2().cast<Complex>();
        const auto l = kappa1_vmap(sum, p), a = kappa1_vmap(sq, p);
        CHECK((l.values - 2.0 * v.values - Complex(0, 1) * a.values).cwiseAbs().maxCoeff() < 1e-12);
    }

    TEST_CASE("W_1 transform on a small fixture") {
        const auto psi = kappa1_gaussian_fixture(256, 128);
        const auto grid = make_spectral_grid(40.0, 8, 16.0, 16, 16);
        const auto w = kappa1_spectral_transform(psi, grid);
        CHECK(spectral_norm2(w) == doctest::Approx(1.0).epsilon(0.05));
        // H_1 becomes multiplication by 2 sigma - p^2 / 2
        const CMatrix yhat = numerics::y_transform(psi, grid.p);
        const auto hw = kappa1_spectral_transform_yhat(apply_hamiltonian_yhat(1, yhat, psi.x0, psi.dx, grid.p), psi.x0, psi.dx, grid);
        const double top = w.values.cwiseAbs().maxCoeff();
        // absolute error against the largest coefficient: lambda passes through 0
        double worst = 0.0;
        for (Eigen::Index a = 0; a < w.values.rows(); ++a)
            for (Eigen::Index b = 0; b < w.values.cols(); ++b) {
                const double lam = 2 * grid.sigma[a] - 0.5 * grid.p[b] * grid.p[b];
                worst = std::max(worst, std::abs(hw.values(a, b) - lam * w.values(a, b)) / top);
            }
        CHECK(worst < 1e-4);
        CHECK_THROWS_AS(make_spectral_grid(-1, 4, 4, 4), DomainError);
    }

    TEST_CASE("kappa = -1 constraint solutions") {
        for (double p : {0.5, 1.0, 2.0})
            CHECK(eigen_residual(-1, [p](double x, double y) { return kappa_m1_constraint_eigfun(p, x, y); }, 0.0, -6, 2, 31, 0.1) < 1e-5);
        CHECK(eigen_residual(-1, [](double x, double y) { return kappa_m1_eigfun(1.0, 0.5, x, y); }, 2 - 0.125, -6, 2, 31, 0.1) < 1e-5);
        CHECK_THROWS_AS(kappa_m1_constraint_profile(0.0, 0.0), DomainError);
        std::vector<double> p = {0.0};
        CHECK_THROWS_AS(kappa_m1_vmap(kappa1_gaussian_fixture(64, 32), p), DomainError);
    }

    TEST_CASE("deficiency probe") {
        const auto neg = deficiency_probe(Potential::NegativeExp);
        CHECK(neg.n_plus == 1);
        CHECK(neg.n_minus == 1);
        CHECK_FALSE(neg.inconclusive);
        const auto pos = deficiency_probe(Potential::PositiveExp);
        CHECK(pos.n_plus + pos.n_minus == 0);
        const auto free = deficiency_probe(Potential::Free);
        CHECK(free.n_plus + free.n_minus == 0);
        CHECK_THROWS_AS(deficiency_probe(Potential::Free, -5.0), DomainError);
        CHECK_THROWS_AS(deficiency_probe(Potential::Free, -8.0, 3.0, 0.1), DomainError);
    }

    TEST_CASE("phase fits") {
        std::vector<double> z, g;
        const double alpha = 1.234;
        for (int k = 0; k < 500; ++k) {
            z.push_back(20.0 + 0.2 * k);
            g.push_back((std::cos(z.back()) + std::cos(z.back() - alpha)) / std::sqrt(z.back()));
        }
        const auto f = fit_phase(z, g);
        CHECK(f.alpha == doctest::Approx(alpha).epsilon(1e-3));
        CHECK(f.residual < 1e-12);
        CHECK_THROWS_AS(asymptotic_phase(1.0, 5.0), DomainError);
        CHECK(tail_exponent(1.0) == doctest::Approx(-0.5).epsilon(0.1));
    }
}
