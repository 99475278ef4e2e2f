#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rieffel::harness {

/// Plot-data selectors accepted by `emit`.
const std::vector<std::string>& emit_names();

struct EmitConfig {
    int kappa = 1;
    double sigma = 1.0, p = 1.0;               // eigenfunction
    double xmin = -8.0, xmax = 3.0;            // eigenfunction x range
    long nx = 512;
};

/// trajectory:    `t,x,y,px,py,H` along the closed-form flow of the kappa fixture
///                ((0,0,1,1), (0,5,0,1), (0,0,1,0) for kappa = 0, 1, -1), t in [-2, 2].
/// eigenfunction: `x,re,im` of f_kappa(sigma, p; x, 0), kappa = +-1.
/// vmap:          kappa = 0: `p,plus_re,plus_im,minus_re,minus_im` for the Gaussian-cone
///                fixture; kappa = +-1: `p,re,im` for the Gaussian fixture.
/// convergence:   `T,value,abs_error` of the kappa = 0 time average against 1/(4 pi).
/// Numbers use 17 significant digits. Throws ValidationError for an unknown selector.
void emit(const std::string& what, const EmitConfig& cfg, std::ostream& os);

/// Writes <dir>/groups/<name>.txt for every built-in group and
/// <dir>/grids/{cone_gaussian,kappa1_gaussian}.csv. Returns the written paths.
std::vector<std::string> generate_fixtures(const std::string& dir);

}  // namespace rieffel::harness
