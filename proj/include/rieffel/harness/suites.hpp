#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rieffel/harness/report.hpp"

namespace rieffel::harness {

struct SuiteConfig {
    double tol_rank = 1e-10;
    long grid_nx = 512;  // x points of the kappa = +-1 grids
    double grid_xmin = -8.0, grid_xmax = 3.0;
    std::string kappa1_grid;     // CSV grid for the kappa = 1 transform checks; built from grid_* when empty
    int truncation_L = 8;        // torus weight truncation
    std::optional<int> kappa;    // kappa suite: all three when unset
    std::string group;           // built-in name or group file; all built-ins when empty
    std::vector<std::string> checks;  // all checks of the suite when empty
};

const std::vector<std::string>& suite_names();
/// Check names accepted by --check for a suite.
const std::vector<std::string>& suite_checks(const std::string& suite);

/// Throws ValidationError describing the first problem with the configuration.
void validate_config(const std::string& suite, const SuiteConfig& cfg);

/// Runs the selected checks in declaration order. Checks that throw are
/// recorded as failures with the exception text.
Report run_suite(const std::string& suite, const SuiteConfig& cfg);

/// max over the lattice nu in {20k/19}, x log-spaced on [1e-3, x_max] of the
/// Bessel-equation residual in u = ln x (5-point stencil, step 1e-3),
/// divided by max(|c|, 1) times the local amplitude sqrt(w^2 + w_u^2 / |c|),
/// c = nu^2 - x^2 for K_{i nu} (x_max 30) and x^2 + nu^2 for J_{i nu} + J_{-i nu} (x_max 50).
double macdonald_ode_residual();
double bessel_sum_ode_residual();

}  // namespace rieffel::harness
