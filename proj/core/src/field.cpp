#include "fracburgers/field.hpp"

#include <cmath>
#include <string>

#include "fracburgers/errors.hpp"

namespace fracburgers {

Field::Field(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ValidationError("Field: expected " + std::to_string(grid_.size()) +
                          " samples, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw NumericalError("Field: non-finite sample at index " +
                           std::to_string(i));
    }
  }
}

Field Field::zeros(const Grid& grid) {
  return Field(grid, std::vector<double>(grid.size(), 0.0));
}

Field Field::constant(const Grid& grid, double value) {
  return Field(grid, std::vector<double>(grid.size(), value));
}

Field Field::from_spectrum(const Grid& grid, std::vector<Complex> spectrum) {
  if (spectrum.size() != grid.spectral_size()) {
    throw ValidationError("Field::from_spectrum: wrong coefficient count");
  }
  Field f(grid, irfft(spectrum, grid.size()));
  f.spectrum_ = std::move(spectrum);
  return f;
}

std::vector<Complex> Field::spectrum() const {
  if (spectrum_) return *spectrum_;
  return rfft(values_);
}

Field Field::with_spectrum() const {
  Field f = *this;
  if (!f.spectrum_) f.spectrum_ = rfft(values_);
  return f;
}

Field Field::operator-() const { return map([](double v) { return -v; }); }

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (!(a.grid() == b.grid())) {
    throw ValidationError(std::string(where) + ": fields live on different grids");
  }
}

Field operator+(const Field& a, const Field& b) {
  require_same_grid(a, b, "operator+");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Field(a.grid(), std::move(out));
}

Field operator-(const Field& a, const Field& b) {
  require_same_grid(a, b, "operator-");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Field(a.grid(), std::move(out));
}

Field operator*(double s, const Field& f) {
  return f.map([s](double v) { return s * v; });
}

Field operator*(const Field& a, const Field& b) {
  require_same_grid(a, b, "operator*");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return Field(a.grid(), std::move(out));
}

}  // namespace fracburgers
