// Lattice evaluation of the singular-integral form of Lambda^alpha.
//
// With h = dx and g(z) = [f(x+z) - f(x) - f'(x) z] / |z|^{1+alpha}, the
// integrand behaves like |z|^{1-alpha} * psi(z) near the origin with
// psi(0) = f''/2 and psi''(0)/2 = f''''/24. The generalized Euler-Maclaurin
// expansion for such weakly singular integrands gives
//
//   integral g = h sum_{j != 0} g(jh) - zeta(alpha-1) f'' h^{2-alpha}
//                - zeta(alpha-3) f'''' h^{4-alpha} / 12 + O(h^{6-alpha}),
//
// i.e. the Taylor closure of the core |z| < h with lattice-consistent
// weights. The odd f'(x) z term cancels on the symmetric lattice. On the
// periodic box the lattice sum runs over every periodic image of z.

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/special_functions.hpp"
#include "fracburgers/spectral.hpp"

namespace fracburgers {
namespace {

void require_alpha(double alpha, const char* where) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw ValidationError(
        fmt::format("{}: alpha = {} outside the admissible range (1, 2)", where,
                    alpha));
  }
}

struct CoreWeights {
  double second;  // multiplies f''
  double fourth;  // multiplies f''''
};

CoreWeights core_weights(double alpha, double h) {
  return {-std::riemann_zeta(alpha - 1.0) * std::pow(h, 2.0 - alpha),
          -std::riemann_zeta(alpha - 3.0) * std::pow(h, 4.0 - alpha) / 12.0};
}

// h * |z|^{-1-alpha} at z = j h.
double lattice_kernel(double alpha, double h, std::size_t j) {
  return h * std::pow(static_cast<double>(j) * h, -1.0 - alpha);
}

}  // namespace

Field apply_fractional_laplacian_integral(const Field& f, double alpha,
                                          double c_alpha) {
  require_alpha(alpha, "apply_fractional_laplacian_integral");
  if (!(c_alpha > 0.0)) {
    throw ValidationError("apply_fractional_laplacian_integral: c_alpha must be > 0");
  }
  const Grid& g = f.grid();
  const std::size_t n = g.size();
  const double h = g.dx();

  // Lattice kernel summed over all periodic images:
  //   W_r = h^{-alpha} sum_{m} |r + mN|^{-1-alpha},  r + mN != 0.
  const double s = 1.0 + alpha;
  const double nd = static_cast<double>(n);
  const double scale = std::pow(h, -alpha) * std::pow(nd, -s);
  std::vector<double> folded(n);
  folded[0] = 2.0 * scale * std::riemann_zeta(s);
  for (std::size_t r = 1; r <= n / 2; ++r) {
    const double a = static_cast<double>(r) / nd;
    folded[r] = scale * (special::hurwitz_zeta(s, a) + special::hurwitz_zeta(s, 1.0 - a));
    folded[n - r] = folded[r];
  }
  double kernel_mass = 0.0;
  for (double w : folded) kernel_mass += w;

  const auto fspec = f.spectrum();
  const auto wspec = rfft(folded);
  // folded is even in r, so correlation equals convolution.
  std::vector<Complex> conv_spec(fspec.size());
  for (std::size_t k = 0; k < fspec.size(); ++k) conv_spec[k] = fspec[k] * wspec[k];
  const auto conv = irfft(conv_spec, n);

  const Field f2 = derivative(f, 2);
  const Field f4 = derivative(f2, 2);
  const CoreWeights core = core_weights(alpha, h);

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lattice = conv[i] - kernel_mass * f[i];
    const double integral =
        lattice + core.second * f2[i] + core.fourth * f4[i];
    out[i] = -c_alpha * integral;
  }
  return Field(g, std::move(out));
}

Field apply_fractional_laplacian_integral(const Grid& grid,
                                          const std::function<double(double)>& f,
                                          double alpha, double c_alpha,
                                          std::optional<FarField> far_field) {
  require_alpha(alpha, "apply_fractional_laplacian_integral");
  if (!(c_alpha > 0.0)) {
    throw ValidationError("apply_fractional_laplacian_integral: c_alpha must be > 0");
  }
  const std::size_t n = grid.size();
  const double h = grid.dx();
  const std::size_t reach = n;  // |z| <= 2L
  std::vector<double> weights(reach + 1);
  for (std::size_t j = 1; j <= reach; ++j) weights[j] = lattice_kernel(alpha, h, j);
  weights[reach] *= 0.5;

  const CoreWeights core = core_weights(alpha, h);
  const double span = static_cast<double>(reach) * h;
  const double tail = std::pow(span, -alpha) / alpha;

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const double fx = f(x);
    double lattice = 0.0;
    for (std::size_t j = 1; j <= reach; ++j) {
      const double z = static_cast<double>(j) * h;
      lattice += weights[j] * ((f(x + z) - fx) + (f(x - z) - fx));
    }
    const double fp1 = f(x + h), fm1 = f(x - h);
    const double fp2 = f(x + 2.0 * h), fm2 = f(x - 2.0 * h);
    const double d2 =
        (-fp2 + 16.0 * fp1 - 30.0 * fx + 16.0 * fm1 - fm2) / (12.0 * h * h);
    const double d4 = (fp2 - 4.0 * fp1 + 6.0 * fx - 4.0 * fm1 + fm2) / (h * h * h * h);
    double integral = lattice + core.second * d2 + core.fourth * d4;
    if (far_field) {
      integral += tail * (far_field->left + far_field->right - 2.0 * fx);
    }
    if (!std::isfinite(integral)) {
      throw NumericalError("apply_fractional_laplacian_integral: non-finite result");
    }
    out[i] = -c_alpha * integral;
  }
  return Field(grid, std::move(out));
}

double calibrate_c_alpha(double alpha, const Grid& grid) {
  require_alpha(alpha, "calibrate_c_alpha");
  const Field gauss = Field::from_function(grid, [](double x) { return std::exp(-x * x); });
  const Field spectral = apply_symbol(gauss, LevySymbol::fractional(alpha));
  const Field unit = apply_fractional_laplacian_integral(gauss, alpha, 1.0);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    num += spectral[i] * unit[i];
    den += unit[i] * unit[i];
  }
  const double c = num / den;
  if (!(std::isfinite(c) && c > 0.0)) {
    throw NumericalError(fmt::format("calibrate_c_alpha: degenerate fit at alpha = {}", alpha));
  }
  return c;
}

double calibrate_c_alpha(double alpha) {
  require_alpha(alpha, "calibrate_c_alpha");
  static std::mutex mutex;
  static std::map<double, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(alpha); it != cache.end()) return it->second;
  }
  const double c = calibrate_c_alpha(alpha, Grid(8.0 * std::numbers::pi, 2048));
  std::lock_guard lock(mutex);
  cache.emplace(alpha, c);
  return c;
}

}  // namespace fracburgers
