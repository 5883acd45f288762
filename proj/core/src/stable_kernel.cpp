#include "fracburgers/stable_kernel.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/log.hpp"
#include "fracburgers/norms.hpp"
#include "fracburgers/spectral.hpp"

namespace fracburgers {
namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

// Geometric panels towards xi = 0 resolve the xi^alpha cusp of exp(-xi^alpha).
constexpr double kGrading = 0.2;
constexpr int kGradedPanels = 24;
constexpr double kUniformWidth = 0.5;

template <typename F>
double gauss_panel(double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const auto& nodes = Gauss::abscissa();
  const auto& weights = Gauss::weights();
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d = half * nodes[i];
    s += weights[i] * (f(mid - d) + f(mid + d));
  }
  return s * half;
}

}  // namespace

StableKernel::StableKernel(double alpha, KernelQuadrature quadrature)
    : alpha_(alpha), quadrature_(quadrature),
      warned_(std::make_shared<std::atomic<bool>>(false)) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw ValidationError(fmt::format("StableKernel: alpha = {} outside (0, 2]", alpha));
  }
  max_frequency_ = quadrature.max_frequency > 0.0 ? quadrature.max_frequency
                                                  : std::pow(36.0, 1.0 / alpha);
  if (std::exp(-std::pow(max_frequency_, alpha)) > 1e-14) {
    throw ValidationError("StableKernel: max_frequency leaves exp(-Xi^alpha) above 1e-14");
  }
  breakpoints_.push_back(0.0);
  for (int k = kGradedPanels; k >= 1; --k) {
    breakpoints_.push_back(std::pow(kGrading, k) * std::min(1.0, max_frequency_));
  }
  double b = std::min(1.0, max_frequency_);
  breakpoints_.push_back(b);
  while (b < max_frequency_) {
    b = std::min(max_frequency_, b + kUniformWidth);
    breakpoints_.push_back(b);
  }
}

template <typename Weight>
double StableKernel::cosine_transform(double y, Weight&& weight, bool sine) const {
  const double ay = std::abs(y);
  std::size_t panels = 0;
  double sum = 0.0;
  for (std::size_t p = 0; p + 1 < breakpoints_.size(); ++p) {
    const double a = breakpoints_[p];
    const double b = breakpoints_[p + 1];
    const auto pieces = static_cast<std::size_t>(
        std::max(1.0, std::ceil(ay * (b - a) / quadrature_.max_panel_phase)));
    panels += pieces;
    if (panels > quadrature_.max_panels) {
      throw NumericalError(fmt::format(
          "StableKernel: oscillation at y = {} needs more than {} panels", y,
          quadrature_.max_panels));
    }
    const double w = (b - a) / static_cast<double>(pieces);
    for (std::size_t q = 0; q < pieces; ++q) {
      const double lo = a + static_cast<double>(q) * w;
      sum += gauss_panel(lo, lo + w, [&](double xi) {
        const double osc = sine ? std::sin(ay * xi) : std::cos(ay * xi);
        return osc * weight(xi);
      });
    }
  }
  return sum / std::numbers::pi;
}

double StableKernel::profile_raw(double y) const {
  const double a = alpha_;
  return cosine_transform(y, [a](double xi) { return std::exp(-std::pow(xi, a)); }, false);
}

double StableKernel::profile(double y) const {
  const double raw = profile_raw(y);
  if (raw < -1e-10) {
    throw NumericalError(
        fmt::format("StableKernel: profile({}) = {} is negative beyond noise", y, raw));
  }
  if (raw < 0.0) {
    if (!warned_->exchange(true)) {
      log_warning(fmt::format(
          "stable kernel alpha={}: clamping quadrature noise {:.3e} at y={} to zero",
          alpha_, raw, y));
    }
    return 0.0;
  }
  return raw;
}

double StableKernel::profile_derivative(double y) const {
  const double a = alpha_;
  const double s = cosine_transform(
      y, [a](double xi) { return xi * std::exp(-std::pow(xi, a)); }, true);
  // d/dy cos(y xi) = -xi sin(y xi); the transform used |y|.
  return y >= 0.0 ? -s : s;
}

double StableKernel::density(double x, double t) const {
  if (!(t > 0.0)) throw ValidationError("StableKernel::density: t must be > 0");
  const double scale = std::pow(t, -1.0 / alpha_);
  return scale * profile(x * scale);
}

Field semigroup_apply(const Field& f, double t, const LevySymbol& symbol) {
  if (!(t > 0.0)) throw ValidationError("semigroup_apply: t must be > 0");
  const Grid& g = f.grid();
  auto coeffs = f.spectrum();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] *= std::exp(-t * symbol(g.wavenumber(k)));
  }
  return Field::from_spectrum(g, std::move(coeffs));
}

Field discrete_delta(const Grid& grid) {
  std::vector<double> values(grid.size(), 0.0);
  values[grid.size() / 2] = 1.0 / grid.dx();
  return Field(grid, std::move(values));
}

KernelBoundsReport verify_kernel_bounds(const StableKernel& kernel,
                                        std::span<const double> ys) {
  double extent = 0.0;
  for (double y : ys) extent = std::max(extent, std::abs(y));
  if (extent < 50.0) {
    throw ValidationError(
        fmt::format("verify_kernel_bounds: grid reaches |y| = {}, needs at least 50", extent));
  }
  KernelBoundsReport report;
  report.min_raw_value = kInfinity;
  const double a = kernel.alpha();
  for (double y : ys) {
    const double raw = kernel.profile_raw(y);
    report.min_raw_value = std::min(report.min_raw_value, raw);
    if (raw < -1e-10) ++report.negative_count;
    const double p = std::max(raw, 0.0);
    const double d = std::abs(kernel.profile_derivative(y));
    const double w = 1.0 + std::abs(y);
    report.c0 = std::max(report.c0, p * std::pow(w, a + 1.0));
    report.c1 = std::max(report.c1, d * std::pow(w, a + 2.0));
    report.y_extent = std::max(report.y_extent, std::abs(y));
  }
  return report;
}

double stable_tail_mass(double alpha, double y) {
  if (!(y > 0.0)) throw ValidationError("stable_tail_mass: y must be positive");
  if (alpha >= 2.0) return 0.0;
  double sum = 0.0;
  double factorial = 1.0;
  for (int k = 1; k <= 3; ++k) {
    factorial *= k;
    const double ka = k * alpha;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += sign * std::tgamma(ka + 1.0) / factorial * std::sin(0.5 * ka * std::numbers::pi) *
           std::pow(y, -ka) / ka;
  }
  return sum / std::numbers::pi;
}

double kernel_mass(const StableKernel& kernel, std::span<const double> ys, bool include_tails) {
  double mass = 0.0;
  double prev = kernel.profile(ys.front());
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (!(ys[i] > ys[i - 1])) throw ValidationError("kernel_mass: grid must increase");
    const double cur = kernel.profile(ys[i]);
    mass += 0.5 * (ys[i] - ys[i - 1]) * (prev + cur);
    prev = cur;
  }
  if (include_tails) {
    if (ys.front() < 0.0) mass += stable_tail_mass(kernel.alpha(), -ys.front());
    if (ys.back() > 0.0) mass += stable_tail_mass(kernel.alpha(), ys.back());
  }
  return mass;
}

std::vector<double> kernel_evaluation_grid(double extent, double core, double fine,
                                           double growth) {
  if (!(extent > 0.0 && core > 0.0 && fine > 0.0 && growth > 0.0)) {
    throw ValidationError("kernel_evaluation_grid: parameters must be positive");
  }
  std::vector<double> half;
  const double c = std::min(core, extent);
  const auto n_fine = static_cast<std::size_t>(std::ceil(c / fine));
  for (std::size_t i = 0; i <= n_fine; ++i) half.push_back(c * static_cast<double>(i) / n_fine);
  double y = c;
  while (y < extent) {
    y = std::min(extent, y * (1.0 + growth));
    half.push_back(y);
  }
  std::vector<double> ys;
  ys.reserve(2 * half.size());
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    if (*it > 0.0) ys.push_back(-*it);
  }
  for (double v : half) ys.push_back(v);
  return ys;
}

SemigroupDecayReport verify_semigroup_decay(const Grid& grid, const LevySymbol& symbol,
                                            double p, std::span<const double> times) {
  if (!(p >= 1.0)) throw ValidationError("verify_semigroup_decay: p must be >= 1");
  if (times.size() < 2 || std::log10(times.back() / times.front()) < 2.0 - 1e-12) {
    throw ValidationError("verify_semigroup_decay: times must span at least two decades");
  }
  SemigroupDecayReport report;
  report.p = p;
  report.alpha = symbol.dominant_alpha();
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  report.predicted_norm_exponent = -(1.0 - inv_p) / report.alpha;
  report.predicted_gradient_exponent = report.predicted_norm_exponent - 1.0 / report.alpha;

  const Field delta = discrete_delta(grid);
  std::vector<double> norms, gradients;
  for (double t : times) {
    const Field s = semigroup_apply(delta, t, symbol);
    const double total = integral(s);
    const double inner = integral_within(s, 0.5 * grid.half_length());
    report.min_inner_mass_fraction = std::min(report.min_inner_mass_fraction, inner / total);
    norms.push_back(lp_norm(s, p));
    gradients.push_back(lp_norm(derivative(s, 1), p));
  }
  report.valid = report.min_inner_mass_fraction >= 0.99;
  if (!report.valid) {
    log_warning(fmt::format(
        "semigroup decay: only {:.4f} of the mass stays in [-L/2, L/2]; range invalid",
        report.min_inner_mass_fraction));
  }
  report.norm_fit = fit_decay(times, norms, false);
  report.gradient_fit = fit_decay(times, gradients, false);
  report.norm_deviation = report.norm_fit.exponent - report.predicted_norm_exponent;
  report.gradient_deviation = report.gradient_fit.exponent - report.predicted_gradient_exponent;
  return report;
}

}  // namespace fracburgers
