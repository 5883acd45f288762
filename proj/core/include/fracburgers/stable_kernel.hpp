#pragma once

#include <atomic>
#include <memory>
#include <span>
#include <vector>

#include "fracburgers/decay_fit.hpp"
#include "fracburgers/field.hpp"
#include "fracburgers/levy_symbol.hpp"

namespace fracburgers {

struct KernelQuadrature {
  /// Upper frequency cut; 0 selects the value with exp(-Xi^alpha) = e^{-36}.
  double max_frequency = 0.0;
  /// Largest phase |y| * width allowed in one Gauss-Legendre panel.
  double max_panel_phase = 4.0;
  /// Budget on the number of panels for a single evaluation.
  std::size_t max_panels = 4'000'000;
};

/// Symmetric alpha-stable profile
///
///   P_alpha(y) = (1/pi) int_0^inf cos(y xi) exp(-xi^alpha) d xi,
///
/// and the self-similar kernel p_alpha(x, t) = t^{-1/alpha} P_alpha(x t^{-1/alpha}).
class StableKernel {
 public:
  explicit StableKernel(double alpha, KernelQuadrature quadrature = {});

  double alpha() const { return alpha_; }
  double max_frequency() const { return max_frequency_; }

  /// P_alpha(y), tiny negative quadrature noise clamped to zero.
  double profile(double y) const;
  /// Unclamped quadrature value.
  double profile_raw(double y) const;
  /// dP_alpha/dy from the differentiated cosine integral.
  double profile_derivative(double y) const;
  /// p_alpha(x, t).
  double density(double x, double t) const;

 private:
  template <typename Weight>
  double cosine_transform(double y, Weight&& weight, bool sine) const;

  double alpha_;
  double max_frequency_;
  KernelQuadrature quadrature_;
  std::vector<double> breakpoints_;
  std::shared_ptr<std::atomic<bool>> warned_;
};

/// e^{-t a(xi_k)} fhat_k; rejects t <= 0.
Field semigroup_apply(const Field& f, double t, const LevySymbol& symbol);

/// Node with value 1/dx at x = 0 (index N/2), zero elsewhere.
Field discrete_delta(const Grid& grid);

struct KernelBoundsReport {
  /// Smallest C0 with P(y) <= C0 (1+|y|)^{-(alpha+1)} on the grid.
  double c0 = 0.0;
  /// Smallest C1 with |P'(y)| <= C1 (1+|y|)^{-(alpha+2)} on the grid.
  double c1 = 0.0;
  double min_raw_value = 0.0;
  std::size_t negative_count = 0;
  double y_extent = 0.0;
};

KernelBoundsReport verify_kernel_bounds(const StableKernel& kernel,
                                        std::span<const double> ys);

/// Trapezoid mass of P_alpha on an arbitrary increasing grid of y values.
/// With `include_tails`, the mass beyond both grid ends is added from the
/// asymptotic series of the tail.
double kernel_mass(const StableKernel& kernel, std::span<const double> ys,
                   bool include_tails = false);

/// int_y^inf P_alpha for large y > 0 from the first three terms of
///   P_alpha(y) ~ (1/pi) sum_k (-1)^{k+1} Gamma(k alpha + 1)/k! sin(k pi alpha/2) y^{-k alpha - 1}.
/// Zero for alpha = 2.
double stable_tail_mass(double alpha, double y);

/// Increasing y grid on [-extent, extent]: spacing `fine` for |y| <= core and
/// geometric growth (ratio 1 + growth) beyond.
std::vector<double> kernel_evaluation_grid(double extent, double core = 10.0,
                                           double fine = 0.02, double growth = 0.01);

struct SemigroupDecayReport {
  double p = 0.0;
  double alpha = 0.0;
  DecayFit norm_fit;
  DecayFit gradient_fit;
  double predicted_norm_exponent = 0.0;
  double predicted_gradient_exponent = 0.0;
  double norm_deviation = 0.0;
  double gradient_deviation = 0.0;
  /// Smallest fraction of mass found inside [-L/2, L/2] over the samples.
  double min_inner_mass_fraction = 1.0;
  /// False when the box contaminates the sampled range.
  bool valid = true;
};

/// Fits ||S(t) delta||_p and ||d/dx S(t) delta||_p against
/// -(1-1/p)/alpha and -(1-1/p)/alpha - 1/alpha, alpha the dominant exponent.
SemigroupDecayReport verify_semigroup_decay(const Grid& grid, const LevySymbol& symbol,
                                            double p, std::span<const double> times);

}  // namespace fracburgers
