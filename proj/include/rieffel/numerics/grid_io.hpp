#pragma once

#include <iosfwd>
#include <string>

#include "rieffel/numerics/fourier.hpp"

namespace rieffel::numerics {

/// CSV with header `x,y,re,im`; x is the outer loop, y the inner one.
/// Numbers are written with 17 significant digits so they round-trip.
void write_grid_csv(std::ostream& os, const ComplexGrid2D& grid);
void write_grid_csv(const std::string& path, const ComplexGrid2D& grid);

/// Reads the format above. Throws ValidationError on a bad header, a ragged
/// or out-of-order layout, or spacing that is not uniform to 1e-12 relative.
ComplexGrid2D read_grid_csv(std::istream& is);
ComplexGrid2D read_grid_csv(const std::string& path);

}  // namespace rieffel::numerics
