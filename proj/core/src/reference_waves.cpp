#include "fracburgers/reference_waves.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/special_functions.hpp"

namespace fracburgers {
namespace {

void require_ordered(double u_minus, double u_plus, const char* where) {
  if (!(std::isfinite(u_minus) && std::isfinite(u_plus) && u_minus < u_plus)) {
    throw ValidationError(fmt::format("{}: need u_- < u_+, got {} and {}", where, u_minus,
                                      u_plus));
  }
}

void require_positive_time(double t, const char* where) {
  if (!(t > 0.0)) throw ValidationError(fmt::format("{}: t must be > 0, got {}", where, t));
}

// h(z) = 2 exp(-z^2) / (sqrt(pi) erfc(z)), the logarithmic derivative of
// erfc up to sign.
double erfc_log_slope(double z) {
  if (z >= 0.0) return 2.0 / (std::sqrt(std::numbers::pi) * special::erfcx(z));
  return 2.0 * std::exp(-z * z) / (std::sqrt(std::numbers::pi) * std::erfc(z));
}

double logistic(double r) {
  if (r >= 0.0) return 1.0 / (1.0 + std::exp(-r));
  const double e = std::exp(r);
  return e / (1.0 + e);
}

}  // namespace

RarefactionWave::RarefactionWave(double u_minus, double u_plus)
    : u_minus_(u_minus), u_plus_(u_plus) {
  require_ordered(u_minus, u_plus, "RarefactionWave");
}

double RarefactionWave::operator()(double x, double t) const {
  require_positive_time(t, "RarefactionWave");
  const double s = x / t;
  if (s <= u_minus_) return u_minus_;
  if (s >= u_plus_) return u_plus_;
  return s;
}

Field RarefactionWave::sample(const Grid& grid, double t) const {
  return Field::from_function(grid, [&](double x) { return (*this)(x, t); });
}

ViscousWave::ViscousWave(double u_minus, double u_plus) : u_minus_(u_minus), u_plus_(u_plus) {
  require_ordered(u_minus, u_plus, "ViscousWave");
}

ViscousWave::Parts ViscousWave::parts(double x, double t, bool derivatives) const {
  require_positive_time(t, "ViscousWave");
  const double s4t = std::sqrt(4.0 * t);
  const double z_minus = (x - u_minus_ * t) / s4t;
  const double z_plus = (u_plus_ * t - x) / s4t;
  const double log_minus =
      -0.5 * u_minus_ * x + 0.25 * u_minus_ * u_minus_ * t + special::log_erfc(z_minus);
  const double log_plus =
      -0.5 * u_plus_ * x + 0.25 * u_plus_ * u_plus_ * t + special::log_erfc(z_plus);
  if (!std::isfinite(log_minus) && !std::isfinite(log_plus)) {
    throw NumericalError(
        fmt::format("ViscousWave: both Cole-Hopf weights underflow at x = {}, t = {}", x, t));
  }
  Parts p{};
  const double r = log_plus - log_minus;
  p.sigma = logistic(r);
  if (derivatives) {
    const double h_plus = erfc_log_slope(z_plus);
    const double h_minus = erfc_log_slope(z_minus);
    p.r_x = -0.5 * (u_plus_ - u_minus_) + (h_plus + h_minus) / s4t;
    // h'(z) = h (h - 2z); dz_+/dx = -1/sqrt(4t), dz_-/dx = 1/sqrt(4t).
    const double dh_plus = h_plus * (h_plus - 2.0 * z_plus);
    const double dh_minus = h_minus * (h_minus - 2.0 * z_minus);
    p.r_xx = (-dh_plus + dh_minus) / (4.0 * t);
  }
  return p;
}

double ViscousWave::value(double x, double t) const {
  const Parts p = parts(x, t, false);
  return u_minus_ + (u_plus_ - u_minus_) * p.sigma;
}

double ViscousWave::dx(double x, double t) const {
  const Parts p = parts(x, t, true);
  return (u_plus_ - u_minus_) * p.sigma * (1.0 - p.sigma) * p.r_x;
}

double ViscousWave::dxx(double x, double t) const {
  const Parts p = parts(x, t, true);
  const double s = p.sigma;
  return (u_plus_ - u_minus_) *
         (s * (1.0 - s) * (1.0 - 2.0 * s) * p.r_x * p.r_x + s * (1.0 - s) * p.r_xx);
}

Field ViscousWave::sample(const Grid& grid, double t) const {
  return Field::from_function(grid, [&](double x) { return value(x, t); });
}

namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

template <typename F>
double gauss_panel(double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0.0;
  const auto& nodes = Gauss::abscissa();
  const auto& weights = Gauss::weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d = half * nodes[i];
    s += weights[i] * (f(mid - d) + f(mid + d));
  }
  return s * half;
}

// Norm over the line of g; panels of width ~ sqrt(t)/4 around the fan, with
// the fan corners x = u_pm t as breakpoints.
template <typename F>
double line_norm(F&& g, double p, double t, double u_minus, double u_plus) {
  const double scale = std::sqrt(t);
  const double lo = u_minus * t - 60.0 * scale;
  const double hi = u_plus * t + 60.0 * scale;
  std::vector<double> breaks;
  const double width = 0.25 * scale;
  const double corners[] = {u_minus * t, u_plus * t};
  for (double x = lo; x < hi; x += width) breaks.push_back(x);
  breaks.push_back(hi);
  for (double c : corners) breaks.push_back(c);
  std::sort(breaks.begin(), breaks.end());

  if (std::isinf(p)) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      const double a = breaks[i], b = breaks[i + 1];
      if (b - a < 1e-14 * scale) continue;
      // Coarse scan then Brent refinement on the panel.
      constexpr int kScan = 8;
      double arg = a, val = std::abs(g(a));
      for (int k = 1; k <= kScan; ++k) {
        const double x = a + (b - a) * k / kScan;
        const double v = std::abs(g(x));
        if (v > val) {
          val = v;
          arg = x;
        }
      }
      const double step = (b - a) / kScan;
      const double left = std::max(a, arg - step), right = std::min(b, arg + step);
      const auto r = boost::math::tools::brent_find_minima(
          [&](double x) { return -std::abs(g(x)); }, left, right, 50);
      best = std::max({best, val, -r.second});
    }
    return best;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b - a <= 0.0) continue;
    sum += gauss_panel(a, b, [&](double x) { return std::pow(std::abs(g(x)), p); });
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace

ViscousNorms viscous_norms(const ViscousWave& w, double p, double t) {
  if (!(p >= 1.0)) throw ValidationError("viscous_norms: p must be >= 1");
  const RarefactionWave wr(w.u_minus(), w.u_plus());
  const double um = w.u_minus(), up = w.u_plus();
  ViscousNorms n{};
  n.difference = line_norm([&](double x) { return w.value(x, t) - wr(x, t); }, p, t, um, up);
  n.gradient = line_norm([&](double x) { return w.dx(x, t); }, p, t, um, up);
  n.curvature = line_norm([&](double x) { return w.dxx(x, t); }, p, t, um, up);
  return n;
}

ViscousRates verify_viscous_rates(const ViscousWave& w, double p,
                                  std::span<const double> times) {
  if (times.empty() || times.front() < 1.0) {
    throw ValidationError("verify_viscous_rates: fits use t >= 1 only");
  }
  if (std::log10(times.back() / times.front()) < 2.0 - 1e-12) {
    throw ValidationError("verify_viscous_rates: times must span at least two decades");
  }
  std::vector<double> diff, grad, curv;
  for (double t : times) {
    const ViscousNorms n = viscous_norms(w, p, t);
    diff.push_back(n.difference);
    grad.push_back(n.gradient);
    curv.push_back(n.curvature);
  }
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  ViscousRates r;
  r.p = p;
  r.difference = fit_decay(times, diff, false);
  r.gradient = fit_decay(times, grad, false);
  r.curvature = fit_decay(times, curv, false);
  r.predicted_difference = -(1.0 - inv_p) / 2.0;
  r.predicted_gradient = -1.0 + inv_p;
  r.predicted_curvature = -1.5 + 0.5 * inv_p;
  return r;
}

}  // namespace fracburgers
