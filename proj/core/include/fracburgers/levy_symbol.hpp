#pragma once

#include <string>
#include <vector>

namespace fracburgers {

/// Nonnegative even Fourier multiplier
///
///   a(xi) = q xi^2 + sum_j a_j |xi|^{alpha_j},   q >= 0, a_j > 0, alpha_j in (0, 2].
///
/// The single term (a_1 = 1, alpha_1 = alpha) is the symbol of Lambda^alpha.
class LevySymbol {
 public:
  struct Term {
    double coefficient;
    double alpha;
  };

  LevySymbol(double local_coefficient, std::vector<Term> terms);

  /// |xi|^alpha.
  static LevySymbol fractional(double alpha);

  double local_coefficient() const { return q_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Smallest exponent among the terms (2 when only the local part is present).
  double dominant_alpha() const;

  double operator()(double xi) const;

  std::string describe() const;

 private:
  double q_;
  std::vector<Term> terms_;
};

}  // namespace fracburgers
