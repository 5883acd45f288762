#include "fracburgers/levy_symbol.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"

namespace fracburgers {

LevySymbol::LevySymbol(double local_coefficient, std::vector<Term> terms)
    : q_(local_coefficient), terms_(std::move(terms)) {
  if (!(std::isfinite(q_) && q_ >= 0.0)) {
    throw ValidationError("LevySymbol: local coefficient must be >= 0");
  }
  for (const auto& t : terms_) {
    if (!(std::isfinite(t.coefficient) && t.coefficient > 0.0)) {
      throw ValidationError("LevySymbol: term coefficients must be > 0");
    }
    if (!(t.alpha > 0.0 && t.alpha <= 2.0)) {
      throw ValidationError(
          fmt::format("LevySymbol: exponent {} outside (0, 2]", t.alpha));
    }
  }
  if (q_ == 0.0 && terms_.empty()) {
    throw ValidationError("LevySymbol: symbol is identically zero");
  }
}

LevySymbol LevySymbol::fractional(double alpha) {
  return LevySymbol(0.0, {Term{1.0, alpha}});
}

double LevySymbol::dominant_alpha() const {
  double a = 2.0;
  for (const auto& t : terms_) a = std::min(a, t.alpha);
  return a;
}

double LevySymbol::operator()(double xi) const {
  const double ax = std::abs(xi);
  if (ax == 0.0) return 0.0;
  double s = q_ * ax * ax;
  for (const auto& t : terms_) s += t.coefficient * std::pow(ax, t.alpha);
  return s;
}

std::string LevySymbol::describe() const {
  std::string out = fmt::format("{}*xi^2", q_);
  for (const auto& t : terms_) {
    out += fmt::format(" + {}*|xi|^{}", t.coefficient, t.alpha);
  }
  return out;
}

}  // namespace fracburgers
