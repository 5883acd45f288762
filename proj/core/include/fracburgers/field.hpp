#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <vector>

#include "fracburgers/fft.hpp"
#include "fracburgers/grid.hpp"

namespace fracburgers {

/// Real samples of a function on a Grid, optionally carrying the matching
/// r2c spectrum (N/2+1 coefficients, unnormalized forward convention).
///
/// Fields are immutable values: every operation returns a new Field.
class Field {
 public:
  Field(Grid grid, std::vector<double> values);

  static Field zeros(const Grid& grid);
  static Field constant(const Grid& grid, double value);

  template <std::invocable<double> F>
  static Field from_function(const Grid& grid, F&& f) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid.x(i));
    return Field(grid, std::move(values));
  }

  /// Builds the field from r2c coefficients; the spectrum is kept as cache.
  static Field from_spectrum(const Grid& grid, std::vector<Complex> spectrum);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool has_spectrum() const { return spectrum_.has_value(); }
  /// Cached spectrum if present, otherwise a freshly computed one.
  std::vector<Complex> spectrum() const;

  Field with_spectrum() const;

  template <std::invocable<double> F>
  Field map(F&& f) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(values_[i]);
    return Field(grid_, std::move(out));
  }

  Field operator-() const;
  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);
  friend Field operator*(double s, const Field& f);
  friend Field operator*(const Field& f, double s) { return s * f; }
  /// Pointwise product.
  friend Field operator*(const Field& a, const Field& b);

 private:
  Grid grid_;
  std::vector<double> values_;
  std::optional<std::vector<Complex>> spectrum_;
};

void require_same_grid(const Field& a, const Field& b, const char* where);

}  // namespace fracburgers
