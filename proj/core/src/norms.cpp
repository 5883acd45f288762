#include "fracburgers/norms.hpp"

#include <algorithm>
#include <cmath>

#include "fracburgers/errors.hpp"

namespace fracburgers {

double lp_norm(std::span<const double> values, double dx, double p) {
  if (!(p >= 1.0)) throw ValidationError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double v : values) s += std::abs(v);
    return s * dx;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s * dx);
  }
  // Scale by the max to keep |v|^p representable for large p.
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : values) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s * dx, 1.0 / p);
}

double lp_norm(const Field& f, double p) { return lp_norm(f.values(), f.grid().dx(), p); }

double integral(const Field& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s * f.grid().dx();
}

double integral_within(const Field& f, double radius) {
  const Grid& g = f.grid();
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g.x(i)) <= radius) s += f[i];
  }
  return s * g.dx();
}

std::vector<double> cumulative_trapezoid(std::span<const double> values, double dx,
                                         double start) {
  std::vector<double> out(values.size());
  if (values.empty()) return out;
  double acc = start;
  out[0] = acc;
  for (std::size_t i = 1; i < values.size(); ++i) {
    acc += 0.5 * dx * (values[i - 1] + values[i]);
    out[i] = acc;
  }
  return out;
}

}  // namespace fracburgers
