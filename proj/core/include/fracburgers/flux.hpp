#pragma once

#include <string>
#include <vector>

namespace fracburgers {

/// Convex polynomial flux f(u) = sum_k c_k u^k with f'' >= kappa > 0.
class Flux {
 public:
  /// f(u) = u^2 / 2.
  static Flux burgers();
  /// f(u) = u^4 / 4 + u^2 / 2, f'' = 3u^2 + 1 >= 1.
  static Flux quartic();
  /// Coefficients c_0, c_1, ...; convexity is checked on [-range, range].
  static Flux polynomial(std::vector<double> coefficients, double range = 10.0);

  static Flux from_name(const std::string& name);

  double value(double u) const;
  double speed(double u) const;      // f'(u)
  double curvature(double u) const;  // f''(u)

  /// Lower bound of f'' on the range checked at construction.
  double convexity() const { return kappa_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  Flux(std::string name, std::vector<double> coefficients, double range);

  std::string name_;
  std::vector<double> coefficients_;
  double kappa_ = 0.0;
};

}  // namespace fracburgers
