#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rieffel/numerics/fourier.hpp"

namespace rieffel::kappa {

using numerics::CMatrix;
using numerics::Complex;
using numerics::ComplexGrid2D;
using numerics::CVector;

// The eigenfunctions of H_kappa = (-d_x^2 + kappa e^{4x} + d_y^2) / 2 factor
// as exp(-i p y) times a real x-profile of z = exp(2x) / 2.

/// pi^-1 sqrt(2 sinh(pi sqrt(sigma))) K_{i sqrt(sigma)}(z).
double kappa1_profile(double sigma, double x);
/// f_1(sigma, p; x, y).
Complex kappa1_eigfun(double sigma, double p, double x, double y);
/// sqrt(2 sinh(pi |p|/2) / pi) K_{i|p|/2}(z); zero at p = 0.
double kappa1_constraint_profile(double p, double x);
/// f~_1(p; x, y), a solution of H_1 f = 0.
Complex kappa1_constraint_eigfun(double p, double x, double y);

/// (1/2) sqrt(2 cosech(pi sqrt(sigma))) (J_{i sqrt(sigma)} + J_{-i sqrt(sigma)})(z).
double kappa_m1_profile(double sigma, double x);
Complex kappa_m1_eigfun(double sigma, double p, double x, double y);
/// (1/2) sqrt(2 pi cosech(pi |p|/2)) (J_{i|p|/2} + J_{-i|p|/2})(z); p != 0.
double kappa_m1_constraint_profile(double p, double x);
Complex kappa_m1_constraint_eigfun(double p, double x, double y);

/// Values of a pairing on a list of momenta.
struct PSection {
    std::vector<double> p;
    CVector values;
};

/// (V_1 psi)(p) = (psi, f~_1(p; .)): the y integral is an exact discrete
/// Fourier step, the x integral the grid sum.
PSection kappa1_vmap(const ComplexGrid2D& psi, std::span<const double> p);
/// The same pairing against f~_{-1}; p = 0 is rejected.
PSection kappa_m1_vmap(const ComplexGrid2D& psi, std::span<const double> p);

/// Gauss-Legendre nodes for the spectral variables: sigma = nu^2 with nu on
/// (0, sqrt(sigma_max)] (this removes the sqrt behaviour at sigma = 0), and p
/// on [-p_max, p_max]. Weights include the Jacobian d sigma = 2 nu d nu.
struct SpectralGrid {
    std::vector<double> sigma, sigma_weights;
    std::vector<double> p, p_weights;
};
SpectralGrid make_spectral_grid(double sigma_max, int nu_panels, double p_max, int p_panels, int order = 16);

/// (W_1 psi)(sigma, p) = (psi, f_1(sigma, p; .)), rows sigma, columns p.
struct SpectralArray {
    SpectralGrid grid;
    CMatrix values;
};
SpectralArray kappa1_spectral_transform(const ComplexGrid2D& psi, const SpectralGrid& grid);

/// The same transform applied to the y-transformed data
/// yhat(i, b) = sum_j psi(x_i, y_j) exp(i p_b y_j) dy.
SpectralArray kappa1_spectral_transform_yhat(const CMatrix& yhat, double x0, double dx, const SpectralGrid& grid);

/// int d sigma dp / (2 pi) |W|^2.
double spectral_norm2(const SpectralArray& s);

/// (W_1^-1 psi_check)(x, y) = int d sigma dp / (2 pi) psi_check(sigma, p) f_1(sigma, p; x, y)
/// on the points of `like` (its values are ignored).
ComplexGrid2D kappa1_inverse_transform(const SpectralArray& s, const ComplexGrid2D& like);

/// Applies H_kappa with 5-point stencils (step h in both x and y) at n points
/// x_k of [x0, x1] and fixed y. Returns max |H f - lambda f| divided by the
/// largest size of the terms, max (|f_xx| + |kappa e^{4x} f| + |f_yy|) / 2 + |lambda f|.
double eigen_residual(int kappa, const std::function<Complex(double, double)>& f, double lambda, double x0, double x1,
                      int n, double y, double h = 1e-3);

/// H_kappa applied on a grid: 5-point stencil in x, exact -p^2 in y after the
/// y transform. Input and output are y-transformed data (rows x, columns p).
CMatrix apply_hamiltonian_yhat(int kappa, const CMatrix& yhat, double x0, double dx, std::span<const double> p);

/// exp(-4((x+0.5)^2 + y^2)), L2-normalized on the grid [x0,x1] x [-10,10]
/// with nx x ny points.
ComplexGrid2D kappa1_gaussian_fixture(Eigen::Index nx = 512, Eigen::Index ny = 256, double x0 = -8.0, double x1 = 3.0);

}  // namespace rieffel::kappa
