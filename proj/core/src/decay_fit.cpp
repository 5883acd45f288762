#include "fracburgers/decay_fit.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"

namespace fracburgers {

DecayFit fit_decay(std::span<const double> times, std::span<const double> values,
                   bool log_correct) {
  if (times.size() != values.size()) {
    throw ValidationError("fit_decay: times and values differ in length");
  }
  if (times.size() < kMinFitSamples) {
    throw ValidationError(fmt::format("fit_decay: need at least {} samples, got {}",
                                      kMinFitSamples, times.size()));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0)) throw ValidationError("fit_decay: times must be positive");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw ValidationError("fit_decay: times must be strictly increasing");
    }
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw ValidationError(
          fmt::format("fit_decay: non-positive value {} at t = {}", values[i], times[i]));
    }
  }
  const double decades = std::log10(times.back() / times.front());
  if (decades < kMinFitDecades - 1e-12) {
    throw ValidationError(fmt::format(
        "fit_decay: time range spans {:.3f} decades, need {}", decades, kMinFitDecades));
  }

  const std::size_t n = times.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(times[i]);
    double v = values[i];
    if (log_correct) v /= std::log(2.0 + times[i]);
    ly[i] = std::log(v);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  DecayFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.exponent * lx[i]);
    rss += r * r;
  }
  fit.residual_rms = std::sqrt(rss / static_cast<double>(n));
  fit.t_min = times.front();
  fit.t_max = times.back();
  fit.samples = n;
  fit.log_corrected = log_correct;
  return fit;
}

}  // namespace fracburgers
