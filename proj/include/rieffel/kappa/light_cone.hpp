#pragma once

#include <span>
#include <vector>

#include "rieffel/numerics/fourier.hpp"

namespace rieffel::kappa {

using numerics::CMatrix;
using numerics::Complex;
using numerics::ComplexGrid2D;
using numerics::CVector;

/// A sampled psi whose Fourier transform vanishes at the origin, which is what
/// makes the dp/|p| weight of the kappa = 0 form integrable.
struct TestFunction {
    ComplexGrid2D grid;
    double origin_ratio = 0.0;  // |psi_check(0,0)| / max |psi_check| at construction
};

/// Throws ValidationError when |psi_check(0,0)| >= tol * max |psi_check|.
TestFunction make_test_function(ComplexGrid2D grid, double tol = 1e-10);

/// Momentum nodes on both half lines (never p = 0) with quadrature weights.
struct ConeGrid {
    std::vector<double> p;
    std::vector<double> weights;  // plain dp weights; the 1/|p| factor is applied by the pairing
};

/// Composite Gauss-Legendre on (0, p_max] mirrored to [-p_max, 0).
ConeGrid gauss_cone_grid(double p_max, int panels, int order = 16);

/// p_k = (k + 1/2) dp for k = -n .. n-1 with trapezoid weights dp.
ConeGrid uniform_cone_grid(double p_max, int n);

/// (V psi)_+-(p) on a cone grid.
struct LightConeSection {
    ConeGrid grid;
    CVector plus, minus;
};

enum class VmapPath {
    Direct,       // analysis sum evaluated exactly at (p, +-p)
    Restriction,  // FFT momentum grid (zero padded), then 8-point Lagrange interpolation
};

/// (V psi)_+-(p) = psi_check(p, +-p).
LightConeSection kappa0_vmap(const TestFunction& psi, const ConeGrid& grid, VmapPath path = VmapPath::Direct);

/// sum_k w_k / (4 pi |p_k|) [a_+ conj(b_+) + a_- conj(b_-)]: the pairing of
/// the two-component space with measure dp / (4 pi |p|).
Complex weighted_inner(const LightConeSection& a, const LightConeSection& b);

/// (psi, phi)_0 = (2 pi)^-1 int dp / (2|p|) [psi_check(p,p) conj(phi_check(p,p)) + (p,-p) term],
/// by adaptive quadrature up to the Nyquist momentum.
Complex kappa0_inner(const TestFunction& psi, const TestFunction& phi, double tol = 1e-12);

enum class ConeObservable { A1, A2, A3 };

/// A1 = p (+) p, A2 = p (+) -p, A3 = -i (p d/dp (+) -p d/dp). A3 needs a
/// uniform grid (4th-order centered differences) and throws DomainError if
/// the section is not negligible (1e-12 of its maximum) at the two edge
/// points on each side, where the stencil does not fit.
LightConeSection kappa0_induced_observable(ConeObservable which, const LightConeSection& s);

/// psi(x, y) = -i x exp(-(x^2+y^2)/2) / (2 pi), so that
/// psi_check(p) = p_x exp(-|p|^2/2). Sampled on [-half_width, half_width]^2.
ComplexGrid2D cone_gaussian_fixture(Eigen::Index n = 256, double half_width = 12.0);

/// psi_check(p) = exp(-|p - p0|^2 / (2 s^2)): a bump centred off the cone.
ComplexGrid2D off_cone_fixture(double p0x = 2.0, double p0y = 0.0, double s = 0.2, Eigen::Index n = 128,
                               double half_width = 40.0);

/// Random element of L: a seeded complex combination of
/// (polynomial of degree 1..2) * Gaussian, each with zero total integral.
ComplexGrid2D random_cone_test_grid(unsigned seed, Eigen::Index n = 128, double half_width = 10.0);

}  // namespace rieffel::kappa
