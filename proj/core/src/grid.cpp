#include "fracburgers/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "fracburgers/errors.hpp"

namespace fracburgers {

Grid::Grid(double half_length, std::size_t n_points)
    : half_length_(half_length), n_(n_points) {
  if (!(std::isfinite(half_length) && half_length > 0.0)) {
    throw ValidationError("Grid: half_length must be positive and finite");
  }
  if (n_points < 8 || !std::has_single_bit(n_points)) {
    throw ValidationError("Grid: n_points must be a power of two >= 8, got " +
                          std::to_string(n_points));
  }
}

double Grid::wavenumber(std::size_t k) const {
  return std::numbers::pi * static_cast<double>(k) / half_length_;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = x(i);
  return xs;
}

}  // namespace fracburgers
