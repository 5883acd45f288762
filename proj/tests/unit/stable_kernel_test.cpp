#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/norms.hpp"
#include "fracburgers/stable_kernel.hpp"
#include "oracles.hpp"

using namespace fracburgers;

TEST(StableKernel, HeatProfile) {
  const StableKernel k(2.0);
  EXPECT_NEAR(k.profile(0.0), 1.0 / std::sqrt(4.0 * std::numbers::pi), 1e-12);
  for (double y : {0.3, 1.0, 2.5, 7.0}) {
    EXPECT_NEAR(k.profile(y), oracles::heat_kernel(y, 1.0), 1e-12);
  }
}

TEST(StableKernel, CauchyProfile) {
  const StableKernel k(1.0);
  EXPECT_NEAR(k.profile(1.0), 1.0 / (2.0 * std::numbers::pi), 1e-10);
  for (double y : {0.0, 0.5, 3.0, 20.0, 80.0}) {
    EXPECT_NEAR(k.profile(y), oracles::cauchy_profile(y), 1e-9);
  }
}

TEST(StableKernel, MatchesFftInversion) {
  const StableKernel k(1.5);
  for (double y : {0.0, 1.0, 5.0}) {
    EXPECT_NEAR(k.profile(y), oracles::stable_profile_fft(1.5, y), 1e-6) << y;
  }
}

TEST(StableKernel, ScalingDefinition) {
  const StableKernel k(1.5);
  for (double t : {0.1, 1.0, 7.5}) {
    for (double x : {-3.0, 0.0, 0.7, 12.0}) {
      const double s = std::pow(t, -1.0 / 1.5);
      EXPECT_NEAR(k.density(x, t), s * k.profile(x * s), 1e-10);
    }
  }
}

TEST(StableKernel, RejectsAlpha) {
  EXPECT_THROW(StableKernel(0.0), ValidationError);
  EXPECT_THROW(StableKernel(2.1), ValidationError);
  const StableKernel k(1.5);
  EXPECT_THROW(k.density(0.0, 0.0), ValidationError);
}

TEST(StableKernel, PanelBudgetFailureIsReported) {
  KernelQuadrature q;
  q.max_panels = 10;
  const StableKernel k(1.5, q);
  EXPECT_THROW(k.profile(1e4), NumericalError);
}

TEST(StableKernel, NonnegativeAndDecreasing) {
  for (double alpha : {1.1, 1.5, 1.9}) {
    const StableKernel k(alpha);
    double prev = k.profile_raw(0.0);
    for (double y = 0.25; y <= 200.0; y *= 1.3) {
      const double v = k.profile_raw(y);
      EXPECT_GE(v, -1e-10) << alpha << " " << y;
      EXPECT_LE(v, prev + 1e-12) << alpha << " " << y;
      prev = v;
    }
  }
}

TEST(StableKernel, DerivativeMatchesDifferenceQuotient) {
  const StableKernel k(1.5);
  for (double y : {-4.0, 0.5, 2.0, 30.0}) {
    const double h = 1e-4;
    const double fd = (k.profile(y + h) - k.profile(y - h)) / (2 * h);
    EXPECT_NEAR(k.profile_derivative(y), fd, 1e-8);
  }
}

TEST(StableKernel, NormalizationWithTails) {
  for (double alpha : {1.1, 1.5, 1.9}) {
    const StableKernel k(alpha);
    const auto ys = kernel_evaluation_grid(100.0);
    EXPECT_NEAR(kernel_mass(k, ys, true), 1.0, 1e-4) << alpha;
  }
}

TEST(StableKernel, PlainTrapezoidMassOnWideGrid) {
  const StableKernel k(1.5);
  EXPECT_NEAR(kernel_mass(k, kernel_evaluation_grid(1000.0)), 1.0, 1e-4);
}

TEST(StableKernel, TailSeriesMatchesQuadrature) {
  const StableKernel k(1.5);
  const auto ys = kernel_evaluation_grid(400.0, 40.0, 0.02, 0.005);
  std::vector<double> right;
  for (double y : ys) {
    if (y >= 40.0) right.push_back(y);
  }
  const double beyond = kernel_mass(k, right) + stable_tail_mass(1.5, 400.0);
  EXPECT_NEAR(beyond, stable_tail_mass(1.5, 40.0), 1e-6);
}

TEST(KernelBounds, GaussianAndCauchyConstants) {
  const auto ys = kernel_evaluation_grid(60.0);
  const auto heat = verify_kernel_bounds(StableKernel(2.0), ys);
  EXPECT_TRUE(std::isfinite(heat.c0));
  EXPECT_GT(heat.c0, 0.0);
  const auto cauchy = verify_kernel_bounds(StableKernel(1.0), ys);
  EXPECT_GT(cauchy.c0, 0.0);
  EXPECT_LT(cauchy.c0, 5.0);
  EXPECT_EQ(cauchy.negative_count, 0u);
  EXPECT_GE(cauchy.y_extent, 50.0);
}

TEST(KernelBounds, StableTailConstant) {
  const StableKernel k(1.5);
  const auto report = verify_kernel_bounds(k, kernel_evaluation_grid(60.0));
  EXPECT_TRUE(std::isfinite(report.c0));
  EXPECT_TRUE(std::isfinite(report.c1));
  EXPECT_EQ(report.negative_count, 0u);
  // P(y) |y|^{alpha+1} approaches Gamma(1+alpha) sin(pi alpha/2)/pi.
  const double limit = std::tgamma(2.5) * std::sin(0.75 * std::numbers::pi) / std::numbers::pi;
  const double r5 = k.profile(5.0) * std::pow(5.0, 2.5);
  const double r50 = k.profile(50.0) * std::pow(50.0, 2.5);
  EXPECT_LT(std::abs(r50 - limit), std::abs(r5 - limit));
  EXPECT_NEAR(r50, limit, 0.02 * limit);
}

TEST(KernelBounds, RequiresWideGrid) {
  EXPECT_THROW(verify_kernel_bounds(StableKernel(1.5), kernel_evaluation_grid(20.0)),
               ValidationError);
}

TEST(Semigroup, IdentityAtTinyTime) {
  const Grid g(20.0, 512);
  const Field f = Field::from_function(g, [](double x) { return std::exp(-x * x); });
  const Field out = semigroup_apply(f, 1e-12, LevySymbol::fractional(1.5));
  EXPECT_LT(lp_norm(out - f, kInfinity), 1e-10);
  EXPECT_THROW(semigroup_apply(f, 0.0, LevySymbol::fractional(1.5)), ValidationError);
  EXPECT_THROW(semigroup_apply(f, -1.0, LevySymbol::fractional(1.5)), ValidationError);
}

TEST(Semigroup, HeatKernelFromDelta) {
  const Grid g(30.0, 1024);
  const Field out = semigroup_apply(discrete_delta(g), 1.0, LevySymbol::fractional(2.0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(out[i], oracles::heat_kernel(g.x(i), 1.0), 1e-8);
  }
}

TEST(Semigroup, CompositionProperty) {
  const Grid g(20.0, 512);
  const LevySymbol s(0.1, {{1.0, 1.5}});
  const Field f = Field::from_function(g, [](double x) { return std::exp(-x * x) * std::cos(x); });
  const Field a = semigroup_apply(semigroup_apply(f, 0.3, s), 0.9, s);
  const Field b = semigroup_apply(f, 1.2, s);
  EXPECT_LT(lp_norm(a - b, kInfinity), 1e-12);
}

TEST(Semigroup, ReproducesProfileFromDelta) {
  // Periodization error ~ 2 sum_n P(2nL) with P(y) ~ 0.3 y^{-2.5}.
  const Grid g(200.0, 8192);
  const StableKernel k(1.5);
  const Field out = semigroup_apply(discrete_delta(g), 1.0, LevySymbol::fractional(1.5));
  for (std::size_t i = 0; i < g.size(); i += 37) {
    EXPECT_NEAR(out[i], k.profile(g.x(i)), 1e-5) << g.x(i);
  }
}

TEST(SemigroupDecay, Exponents) {
  struct Case {
    double alpha, p, expected, tol;
  };
  const Grid g(1024.0, 16384);
  const std::vector<double> times = [] {
    std::vector<double> t;
    for (int i = 0; i <= 12; ++i) t.push_back(std::pow(10.0, i / 6.0));
    return t;
  }();
  for (const Case& c : {Case{2.0, kInfinity, -0.5, 0.02}, Case{1.5, kInfinity, -2.0 / 3.0, 0.03},
                        Case{1.5, 2.0, -1.0 / 3.0, 0.03}}) {
    const auto report = verify_semigroup_decay(g, LevySymbol::fractional(c.alpha), c.p, times);
    EXPECT_TRUE(report.valid);
    EXPECT_NEAR(report.norm_fit.exponent, c.expected, c.tol) << c.alpha << " " << c.p;
    EXPECT_NEAR(report.predicted_norm_exponent, c.expected, 1e-14);
    EXPECT_NEAR(report.gradient_fit.exponent, report.predicted_gradient_exponent, 0.03);
  }
}

TEST(SemigroupDecay, FlagsBoxContamination) {
  const Grid g(16.0, 512);
  std::vector<double> times;
  for (int i = 0; i <= 8; ++i) times.push_back(std::pow(10.0, i / 4.0));
  const auto report = verify_semigroup_decay(g, LevySymbol::fractional(1.5), 2.0, times);
  EXPECT_FALSE(report.valid);
  EXPECT_LT(report.min_inner_mass_fraction, 0.99);
}

TEST(SemigroupDecay, RequiresTwoDecades) {
  const Grid g(64.0, 1024);
  const std::vector<double> times = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  EXPECT_THROW(verify_semigroup_decay(g, LevySymbol::fractional(1.5), 2.0, times),
               ValidationError);
}
