#pragma once

#include <cstddef>
#include <span>

namespace fracburgers {

/// Least-squares power law  log(value) ~ exponent * log(t) + intercept.
struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t samples = 0;
  /// Whether values were divided by log(2+t) before fitting.
  bool log_corrected = false;
};

inline constexpr std::size_t kMinFitSamples = 6;
inline constexpr double kMinFitDecades = 1.5;

/// Rejects non-positive values, non-increasing times, fewer than six samples
/// or a time range shorter than 1.5 decades.
DecayFit fit_decay(std::span<const double> times, std::span<const double> values,
                   bool log_correct);

}  // namespace fracburgers
