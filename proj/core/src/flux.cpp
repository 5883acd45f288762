#include "fracburgers/flux.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"

namespace fracburgers {

Flux::Flux(std::string name, std::vector<double> coefficients, double range)
    : name_(std::move(name)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() < 3) {
    throw ValidationError("Flux: need at least a quadratic term");
  }
  kappa_ = curvature(0.0);
  constexpr int kSamples = 2001;
  for (int i = 0; i < kSamples; ++i) {
    const double u = -range + 2.0 * range * i / (kSamples - 1);
    kappa_ = std::min(kappa_, curvature(u));
  }
  if (!(kappa_ > 0.0)) {
    throw ValidationError(
        fmt::format("Flux '{}': f'' is not bounded below by a positive constant", name_));
  }
}

Flux Flux::burgers() { return Flux("burgers", {0.0, 0.0, 0.5}, 10.0); }

Flux Flux::quartic() { return Flux("quartic", {0.0, 0.0, 0.5, 0.0, 0.25}, 10.0); }

Flux Flux::polynomial(std::vector<double> coefficients, double range) {
  return Flux("polynomial", std::move(coefficients), range);
}

Flux Flux::from_name(const std::string& name) {
  if (name == "burgers") return burgers();
  if (name == "quartic") return quartic();
  throw ValidationError("unknown flux '" + name + "' (expected burgers or quartic)");
}

double Flux::value(double u) const {
  double s = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) s = s * u + *it;
  return s;
}

double Flux::speed(double u) const {
  double s = 0.0;
  for (std::size_t k = coefficients_.size() - 1; k >= 1; --k) {
    s = s * u + static_cast<double>(k) * coefficients_[k];
  }
  return s;
}

double Flux::curvature(double u) const {
  double s = 0.0;
  for (std::size_t k = coefficients_.size() - 1; k >= 2; --k) {
    s = s * u + static_cast<double>(k * (k - 1)) * coefficients_[k];
  }
  return s;
}

}  // namespace fracburgers
