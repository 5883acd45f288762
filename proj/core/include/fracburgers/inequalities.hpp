#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracburgers/field.hpp"
#include "fracburgers/norms.hpp"

namespace fracburgers {

/// ||f||_2^{2(1+a)} / (||Lambda^{a/2} f||_2^2 ||f||_1^{2a}).
double check_nash(const Field& f, double alpha);

/// ||Lambda^a f||_p / (||f_x||_p^{2-a} ||f_xx||_p^{a-1}), a in (1, 2].
double check_interpolation(const Field& f, double alpha, double p);

/// ||f||_p / (||f_x||_inf^a ||f||_{p0}^{1-a}),  a = (1/p0 - 1/p)/(1 + 1/p0),
/// for 1 < p0 < p <= inf.
double check_gagliardo_nirenberg(const Field& f, double p0, double p);

double gagliardo_nirenberg_exponent(double p0, double p);

/// Raw values of the positivity forms of Lambda^alpha and their scales.
struct PositivityForms {
  /// int (Lambda^a f)|f|^{p-2} f.
  double hyper_lhs = 0.0;
  /// 4(p-1)/p^2 int (Lambda^{a/2} |f|^{p/2})^2.
  double hyper_rhs = 0.0;
  double hyper_scale = 0.0;
  /// int (Lambda^a f) sgn f.
  double sign = 0.0;
  double sign_scale = 0.0;
  /// int (Lambda^a f) f^+ and int (Lambda^a f) f^-, with f^+ = max(f, 0) and
  /// f^- = min(f, 0) so that f = f^+ + f^-.
  double positive_part = 0.0;
  double negative_part = 0.0;
  double part_scale = 0.0;
};

PositivityForms evaluate_positivity_forms(const Field& f, double alpha, double p);

struct InequalityReport {
  std::string name;
  std::size_t count = 0;
  /// Inputs excluded by the preconditions (zero field, vanishing derivative).
  std::size_t rejected = 0;
  /// Ratio forms: largest LHS/RHS. Sign forms: smallest value/scale.
  double worst_ratio = 0.0;
  /// Ratio forms: empirical constant (= worst ratio). Sign forms: unused (0).
  double implied_constant = 0.0;
  std::size_t violations = 0;
  /// Index of the worst corpus member.
  std::size_t worst_index = 0;
};

/// Four reports (hyper, sgn, plus, minus) for a single field. A form is
/// violated when value < -tolerance * scale. Rejects p <= 1.
std::vector<InequalityReport> check_positivity_forms(const Field& f, double alpha, double p,
                                                     double tolerance = 1e-8);

/// Smooth, rapidly decaying test function built from Gaussian wave packets.
struct CorpusMember {
  struct Packet {
    double amplitude;
    double center;
    double width;
    double wavenumber;
    double phase;
  };
  std::vector<Packet> packets;
  bool nonnegative = false;

  double operator()(double x) const;
};

/// Deterministic corpus: a quarter nonnegative bump sums, the rest
/// sign-changing packets. Centres lie in [-spread, spread].
std::vector<CorpusMember> random_corpus(std::size_t count, std::uint64_t seed,
                                        double spread = 8.0);

/// Samples the member, keeps only |k| <= N/8 and normalizes to ||f||_inf = 1.
Field realize(const CorpusMember& member, const Grid& grid);

struct SuiteOptions {
  double alpha = 1.5;
  std::vector<double> hyper_exponents = {1.5, 2.0, 3.0, 4.0};
  std::vector<double> interpolation_exponents = {1.0, 2.0, kInfinity};
  /// (p0, p) pairs for the Gagliardo-Nirenberg ratio.
  std::vector<std::pair<double, double>> gn_pairs = {{3.0, kInfinity}, {2.0, 4.0}};
  double tolerance = 1e-8;
};

/// Runs every inequality over the corpus. Inputs rejected by a
/// precondition are counted, never reported as violations.
std::vector<InequalityReport> run_inequality_suite(const std::vector<Field>& corpus,
                                                   const SuiteOptions& options);

}  // namespace fracburgers
