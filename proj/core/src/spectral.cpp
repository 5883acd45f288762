#include "fracburgers/spectral.hpp"

#include <cmath>

#include "fracburgers/errors.hpp"

namespace fracburgers {
Field apply_symbol(const Field& f, const LevySymbol& symbol) {
  const Grid& g = f.grid();
  auto coeffs = f.spectrum();
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] *= symbol(g.wavenumber(k));
  return Field::from_spectrum(g, std::move(coeffs));
}

double symbol_quadratic_form(const Field& f, const LevySymbol& symbol) {
  const Grid& g = f.grid();
  const auto coeffs = f.spectrum();
  const std::size_t n = g.size();
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    // Interior r2c slots stand for the +k and -k pair.
    const double mult = (k == 0 || k == n / 2) ? 1.0 : 2.0;
    sum += mult * symbol(g.wavenumber(k)) * std::norm(coeffs[k]);
  }
  // Parseval: sum_j |f_j|^2 dx = (dx / N) sum_k |F_k|^2.
  return sum * g.dx() / static_cast<double>(n);
}

Field derivative(const Field& f, int order) {
  if (order != 1 && order != 2) {
    throw ValidationError("derivative: order must be 1 or 2");
  }
  const Grid& g = f.grid();
  auto coeffs = f.spectrum();
  const std::size_t nyquist = g.size() / 2;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double xi = g.wavenumber(k);
    if (order == 1) {
      coeffs[k] *= (k == nyquist) ? Complex(0.0) : Complex(0.0, xi);
    } else {
      coeffs[k] *= -xi * xi;
    }
  }
  return Field::from_spectrum(g, std::move(coeffs));
}

void dealias_two_thirds(std::span<Complex> spectrum) {
  const std::size_t n = 2 * (spectrum.size() - 1);
  const std::size_t cutoff = n / 3;
  for (std::size_t k = cutoff + 1; k < spectrum.size(); ++k) spectrum[k] = 0.0;
}

}  // namespace fracburgers
