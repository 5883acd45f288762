#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "fracburgers/decay_fit.hpp"
#include "fracburgers/errors.hpp"
#include "fracburgers/experiment.hpp"
#include "fracburgers/inequalities.hpp"
#include "fracburgers/norms.hpp"

using namespace fracburgers;

namespace {

Field gaussian(const Grid& g, double sigma = 1.0, double amplitude = 1.0) {
  return Field::from_function(
      g, [=](double x) { return amplitude * std::exp(-(x / sigma) * (x / sigma)); });
}

// Sign-changing packet with a nonzero mean.
Field wavelet(const Grid& g) {
  return Field::from_function(g, [](double x) {
    return std::exp(-0.5 * x * x) * (std::cos(2.0 * x) + 0.3 * std::sin(x));
  });
}

double whole_line(const auto& f) {
  using Q = boost::math::quadrature::gauss_kronrod<double, 61>;
  return Q::integrate(f, -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity(), 15, 1e-14);
}

std::vector<double> log_times(double lo, double hi, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return t;
}

}  // namespace

TEST(LpNorm, Examples) {
  const Grid g(32.0, 4096);
  EXPECT_NEAR(lp_norm(gaussian(g), 2.0), std::pow(std::numbers::pi / 2.0, 0.25), 1e-12);
  const Field box = Field::from_function(g, [](double x) {
    return 0.5 * (std::erf(20.0 * (x + 1.0)) - std::erf(20.0 * (x - 1.0)));
  });
  EXPECT_NEAR(lp_norm(box, 1.0), 2.0, 1e-12);
  EXPECT_NEAR(lp_norm(box, kInfinity), 1.0, 1e-12);
  for (double p : {1.0, 2.0, 3.5, kInfinity}) EXPECT_EQ(lp_norm(Field::zeros(g), p), 0.0);
}

TEST(LpNorm, RejectsSubunitExponent) {
  const Grid g(8.0, 64);
  EXPECT_THROW(lp_norm(gaussian(g), 0.5), ValidationError);
}

TEST(FitDecay, ExactPowerLaw) {
  const auto t = log_times(1.0, 1000.0, 10);
  std::vector<double> v;
  for (double s : t) v.push_back(3.0 * std::pow(s, -0.25));
  const DecayFit fit = fit_decay(t, v, false);
  EXPECT_NEAR(fit.exponent, -0.25, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-12);
  EXPECT_LT(fit.residual_rms, 1e-12);
  EXPECT_EQ(fit.samples, 10u);
  EXPECT_FALSE(fit.log_corrected);
}

TEST(FitDecay, LogCorrectionRemovesFactor) {
  const auto t = log_times(1.0, 1000.0, 10);
  std::vector<double> v;
  for (double s : t) v.push_back(std::pow(s, -0.25) * std::log(2.0 + s));
  const DecayFit fit = fit_decay(t, v, true);
  EXPECT_NEAR(fit.exponent, -0.25, 1e-10);
  EXPECT_TRUE(fit.log_corrected);
}

TEST(FitDecay, UncorrectedLogFactorBiasesUpward) {
  const auto t = log_times(5.0, 500.0, 12);
  std::vector<double> v;
  for (double s : t) v.push_back(std::pow(s, -0.25) * std::log(2.0 + s));
  const DecayFit fit = fit_decay(t, v, false);
  // d log log(2+t) / d log t is about 1/log t, roughly 0.25 on this range.
  EXPECT_GT(fit.exponent, -0.25);
  EXPECT_NEAR(fit.exponent, 0.0, 0.02);
}

TEST(FitDecay, Rejections) {
  const auto t = log_times(1.0, 1000.0, 8);
  std::vector<double> v(t.size(), 1.0);
  v[3] = 0.0;
  EXPECT_THROW(fit_decay(t, v, false), ValidationError);
  v[3] = 1.0;
  const auto few = log_times(1.0, 1000.0, 5);
  EXPECT_THROW(fit_decay(few, std::vector<double>(5, 1.0), false), ValidationError);
  const auto narrow = log_times(1.0, 10.0, 8);
  EXPECT_THROW(fit_decay(narrow, v, false), ValidationError);
  auto unordered = t;
  std::swap(unordered[1], unordered[2]);
  EXPECT_THROW(fit_decay(unordered, v, false), ValidationError);
}

TEST(ScaleInvariance, AmplitudeScaling) {
  const Grid g(32.0, 2048);
  const Field f = wavelet(g);
  const Field f2 = 2.0 * f;
  EXPECT_NEAR(check_nash(f2, 1.5) / check_nash(f, 1.5), 1.0, 1e-12);
  for (double p : {1.0, 2.0, kInfinity}) {
    EXPECT_NEAR(check_interpolation(f2, 1.5, p) / check_interpolation(f, 1.5, p), 1.0, 1e-12);
  }
  EXPECT_NEAR(check_gagliardo_nirenberg(f2, 3.0, kInfinity) /
                  check_gagliardo_nirenberg(f, 3.0, kInfinity),
              1.0, 1e-12);
}

TEST(ScaleInvariance, DilationWithTheBoxIsExact) {
  const Grid g(32.0, 2048);
  const Field f = wavelet(g);
  for (double sigma : {0.5, 2.0, 4.0}) {
    const Grid gs(32.0 * sigma, 2048);
    const Field fs = Field::from_function(gs, [sigma](double x) {
      const double y = x / sigma;
      return std::exp(-0.5 * y * y) * (std::cos(2.0 * y) + 0.3 * std::sin(y));
    });
    EXPECT_NEAR(check_nash(fs, 1.5) / check_nash(f, 1.5), 1.0, 1e-10) << sigma;
    for (double p : {1.0, 2.0, kInfinity}) {
      EXPECT_NEAR(check_interpolation(fs, 1.5, p) / check_interpolation(f, 1.5, p), 1.0, 1e-10)
          << sigma << " " << p;
    }
    EXPECT_NEAR(check_gagliardo_nirenberg(fs, 3.0, kInfinity) /
                    check_gagliardo_nirenberg(f, 3.0, kInfinity),
                1.0, 1e-10)
        << sigma;
  }
}

TEST(ScaleInvariance, DilationOnAFixedGrid) {
  const Grid g(256.0, 16384);
  const double nash = check_nash(gaussian(g), 1.5);
  const double interp = check_interpolation(gaussian(g), 1.5, 2.0);
  const double gn = check_gagliardo_nirenberg(gaussian(g), 3.0, kInfinity);
  for (double sigma : {0.5, 2.0, 4.0}) {
    const Field f = gaussian(g, sigma);
    EXPECT_NEAR(check_nash(f, 1.5) / nash, 1.0, 1e-4) << sigma;
    EXPECT_NEAR(check_interpolation(f, 1.5, 2.0) / interp, 1.0, 1e-7) << sigma;
    // The sup of f_x is sampled at grid nodes.
    EXPECT_NEAR(check_gagliardo_nirenberg(f, 3.0, kInfinity) / gn, 1.0, 5e-4) << sigma;
  }
}

TEST(Interpolation, SecondOrderLimitIsExact) {
  const Grid g(32.0, 2048);
  EXPECT_NEAR(check_interpolation(wavelet(g), 2.0, 2.0), 1.0, 1e-12);
}

TEST(Interpolation, GaussianMatchesQuadrature) {
  const double a = 1.5;
  // Parseval: ||Lambda^a f||_2^2 = (1/2pi) int |xi|^{2a} pi e^{-xi^2/2} d xi.
  const double lambda2 = whole_line([a](double xi) {
                           return 0.5 * std::pow(std::abs(xi), 2.0 * a) * std::exp(-0.5 * xi * xi);
                         });
  const double fx2 = whole_line([](double x) { return 4.0 * x * x * std::exp(-2.0 * x * x); });
  const double fxx2 = whole_line([](double x) {
    const double q = 4.0 * x * x - 2.0;
    return q * q * std::exp(-2.0 * x * x);
  });
  const double expected =
      std::sqrt(lambda2) / (std::pow(std::sqrt(fx2), 2.0 - a) * std::pow(std::sqrt(fxx2), a - 1.0));
  const Grid g(128.0, 8192);
  EXPECT_NEAR(check_interpolation(gaussian(g), a, 2.0), expected, 1e-8 * expected);
}

TEST(Interpolation, Rejections) {
  const Grid g(16.0, 256);
  EXPECT_THROW(check_interpolation(Field::zeros(g), 1.5, 2.0), ValidationError);
  EXPECT_THROW(check_interpolation(gaussian(g), 1.0, 2.0), ValidationError);
  EXPECT_THROW(check_nash(Field::zeros(g), 1.5), ValidationError);
}

TEST(GagliardoNirenberg, Exponent) {
  EXPECT_DOUBLE_EQ(gagliardo_nirenberg_exponent(3.0, kInfinity), 0.25);
  EXPECT_DOUBLE_EQ(gagliardo_nirenberg_exponent(2.0, 4.0), (0.5 - 0.25) / 1.5);
  EXPECT_THROW(gagliardo_nirenberg_exponent(3.0, 3.0), ValidationError);
  EXPECT_THROW(gagliardo_nirenberg_exponent(1.0, 4.0), ValidationError);
  EXPECT_THROW(gagliardo_nirenberg_exponent(4.0, 2.0), ValidationError);
}

TEST(GagliardoNirenberg, RefinementStable) {
  const Grid g(32.0, 1024);
  const double coarse = check_gagliardo_nirenberg(gaussian(g), 3.0, kInfinity);
  const double fine = check_gagliardo_nirenberg(gaussian(g.refined()), 3.0, kInfinity);
  EXPECT_TRUE(std::isfinite(coarse));
  EXPECT_NEAR(fine / coarse, 1.0, 0.05);
}

TEST(Nash, CorpusRefinementStable) {
  const Grid g(32.0, 1024);
  const auto corpus = random_corpus(100, 1);
  double coarse = 0.0, fine = 0.0;
  for (const auto& m : corpus) {
    coarse = std::max(coarse, check_nash(realize(m, g), 1.5));
    fine = std::max(fine, check_nash(realize(m, g.refined()), 1.5));
  }
  EXPECT_TRUE(std::isfinite(coarse));
  EXPECT_NEAR(fine / coarse, 1.0, 0.05);
}

TEST(Positivity, QuadraticCaseIsParseval) {
  const Grid g(32.0, 2048);
  const PositivityForms f = evaluate_positivity_forms(gaussian(g), 1.5, 2.0);
  EXPECT_GT(f.hyper_lhs, 0.0);
  EXPECT_NEAR(f.hyper_lhs, f.hyper_rhs, 1e-12 * f.hyper_scale);
}

TEST(Positivity, SecondOrderEqualityForNonnegativeFields) {
  const Grid g(32.0, 4096);
  for (double p : {1.5, 3.0, 4.0}) {
    const PositivityForms f = evaluate_positivity_forms(gaussian(g, 1.3), 2.0, p);
    EXPECT_NEAR(f.hyper_lhs, f.hyper_rhs, 1e-8) << p;
  }
}

TEST(Positivity, SignChangingPacketSatisfiesAllForms) {
  const Grid g(32.0, 2048);
  for (const auto& r : check_positivity_forms(wavelet(g), 1.5, 3.0)) {
    EXPECT_EQ(r.violations, 0u) << r.name << " " << r.worst_ratio;
  }
  const PositivityForms f = evaluate_positivity_forms(wavelet(g), 1.5, 3.0);
  EXPECT_GT(f.hyper_lhs - f.hyper_rhs, 0.0);
  EXPECT_GT(f.sign, 0.0);
  EXPECT_GT(f.positive_part, 0.0);
  EXPECT_GT(f.negative_part, 0.0);
}

TEST(Positivity, NegativePartUsesSignedConvention) {
  // With f^- = max(0, -f) the form would be -int (Lambda f) min(f, 0) <= 0.
  const Grid g(32.0, 2048);
  const PositivityForms f = evaluate_positivity_forms(-1.0 * gaussian(g), 1.5, 2.0);
  EXPECT_GT(f.negative_part, 0.0);
  EXPECT_NEAR(f.positive_part, 0.0, 1e-14);
}

TEST(Positivity, RejectsUnitExponent) {
  const Grid g(16.0, 256);
  EXPECT_THROW(check_positivity_forms(gaussian(g), 1.5, 1.0), ValidationError);
}

TEST(Suite, CorpusHasNoViolations) {
  const Grid g(32.0, 1024);
  std::vector<Field> corpus;
  for (const auto& m : random_corpus(100, 1)) corpus.push_back(realize(m, g));
  const auto reports = run_inequality_suite(corpus, SuiteOptions{});
  std::vector<std::string> names;
  for (const auto& r : reports) {
    names.push_back(r.name);
    EXPECT_EQ(r.violations, 0u) << r.name;
    EXPECT_EQ(r.count + r.rejected, 100u) << r.name;
    EXPECT_TRUE(std::isfinite(r.worst_ratio)) << r.name;
  }
  for (const char* prefix : {"nash", "interpolation", "gagliardo_nirenberg", "hyper", "sgn", "plus",
                             "minus"}) {
    EXPECT_TRUE(std::any_of(names.begin(), names.end(), [&](const std::string& n) {
      return n.rfind(prefix, 0) == 0;
    })) << prefix;
  }
}

TEST(Suite, DegenerateFieldsAreRejectedNotViolations) {
  const Grid g(32.0, 1024);
  const std::vector<Field> corpus(5, Field::constant(g, 0.0));
  for (const auto& r : run_inequality_suite(corpus, SuiteOptions{})) {
    EXPECT_EQ(r.violations, 0u) << r.name;
    EXPECT_EQ(r.rejected, 5u) << r.name;
  }
}

TEST(Corpus, DeterministicAndNormalized) {
  const Grid g(32.0, 1024);
  const auto a = random_corpus(12, 42);
  const auto b = random_corpus(12, 42);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Field fa = realize(a[i], g);
    const Field fb = realize(b[i], g);
    EXPECT_EQ(lp_norm(fa - fb, kInfinity), 0.0);
    EXPECT_NEAR(lp_norm(fa, kInfinity), 1.0, 1e-14);
    if (a[i].nonnegative) {
      EXPECT_GE(a[i](0.3), 0.0);
    }
  }
  EXPECT_TRUE(a[0].nonnegative);
}

TEST(Experiment, PredictedExponents) {
  EXPECT_DOUBLE_EQ(predicted_exponent(1.5, kInfinity), -0.25);
  EXPECT_NEAR(predicted_exponent(1.9, kInfinity), -0.45, 1e-15);
  EXPECT_DOUBLE_EQ(predicted_exponent(1.5, 4.0), -0.0625);
  EXPECT_DOUBLE_EQ(critical_exponent(1.5), 3.0);
}

TEST(Experiment, PredictedExponentDecreasesInP) {
  for (double alpha : {1.2, 1.5, 1.8}) {
    double prev = 0.0;
    for (double p = critical_exponent(alpha) + 0.5; p < 100.0; p *= 1.3) {
      const double e = predicted_exponent(alpha, p);
      EXPECT_LT(e, prev) << alpha << " " << p;
      prev = e;
    }
    EXPECT_LT(predicted_exponent(alpha, kInfinity), prev);
  }
}

TEST(Experiment, RejectsHypothesisViolations) {
  const Grid g(64.0, 512);
  SolverConfig config{g, LevySymbol::fractional(1.5)};
  config.dt = 0.05;
  config.t_end = 1.0;
  const auto datum = InitialDatum::zero(g, -1.0);
  try {
    rarefaction_rate_experiment(1.5, 2.0, datum, config);
    FAIL() << "p below the critical exponent accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(3-alpha)/(alpha-1) = 3"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(rarefaction_rate_experiment(1.5, 3.0, datum, config), ValidationError);
  EXPECT_THROW(predicted_exponent(2.0, kInfinity), ValidationError);
  EXPECT_THROW(critical_exponent(1.0), ValidationError);
  EXPECT_THROW(rarefaction_rate_experiment(1.5, kInfinity, datum, config), ValidationError);
}

TEST(Experiment, TableAndCalibration) {
  const Grid g(200.0, 2048);
  SolverConfig config{g, LevySymbol::fractional(1.5)};
  config.dt = 0.05;
  config.t_end = 40.0;
  config.sample_times = log_times(1.0, 40.0, 8);
  const auto datum = InitialDatum::from_density(-1.0, Field::from_function(g, [](double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c);
  }));
  const ExperimentResult r = rarefaction_rate_experiment(1.5, kInfinity, datum, config);
  ASSERT_EQ(r.table.size(), 8u);
  EXPECT_DOUBLE_EQ(r.predicted, -0.25);
  EXPECT_DOUBLE_EQ(r.table.front().predicted_bound, r.table.front().norm);
  EXPECT_TRUE(r.fit.log_corrected);
  EXPECT_FALSE(r.uncorrected_fit.log_corrected);
  EXPECT_DOUBLE_EQ(r.gap, r.fit.exponent - r.predicted);
  for (const auto& row : r.table) {
    EXPECT_GT(row.norm, 0.0);
    EXPECT_LT(row.viscous_distance, row.norm + 1.0);
  }
  EXPECT_LT(r.table.back().norm, r.table.front().norm);
}
