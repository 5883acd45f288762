#pragma once

#include <vector>

#include "fracburgers/decay_fit.hpp"
#include "fracburgers/inequalities.hpp"
#include "fracburgers/solver.hpp"

namespace fracburgers {

/// (3 - alpha)/(alpha - 1), the lower end of the admissible p range.
double critical_exponent(double alpha);

/// -[alpha - 1 - (3 - alpha)/p]/2, the rate of ||u - w^R||_p.
double predicted_exponent(double alpha, double p);

struct ExperimentRow {
  double t = 0.0;
  /// ||u(t) - w^R(t)||_p on the grid.
  double norm = 0.0;
  /// C t^{predicted} log(2+t), C fixed by the first row.
  double predicted_bound = 0.0;
  /// ||u(t) - w(t)||_p against the viscous wave, a diagnostic.
  double viscous_distance = 0.0;
};

struct ExperimentResult {
  double alpha = 0.0;
  double p = 0.0;
  double predicted = 0.0;
  /// Fit with log(2+t) divided out.
  DecayFit fit;
  /// Plain power-law fit of the same data.
  DecayFit uncorrected_fit;
  /// fit.exponent - predicted; positive means slower decay than the bound.
  double gap = 0.0;
  std::vector<ExperimentRow> table;
  bool box_ok = true;
  Trajectory trajectory;
};

/// Runs the solver and measures ||u(t) - w^R(t)||_p at every positive sample
/// time. Rejects p <= (3-alpha)/(alpha-1), alpha outside (1, 2) and data
/// with u_- >= u_+.
ExperimentResult rarefaction_rate_experiment(double alpha, double p, const InitialDatum& datum,
                                         const SolverConfig& config);

struct InvariantTolerances {
  /// Relative drift of int v.
  double mass = 1e-8;
  /// Growth of ||u||_inf over ||u_0||_inf.
  double max_principle = 1e-8;
  /// min v >= -monotonicity * ||v||_inf.
  double monotonicity = 1e-10;
  /// t^{1-1/p} ||v||_p <= gradient_slack ||m||^{1/p} for t >= 1.
  double gradient_slack = 1.1;
  /// Allowed increase of ||u - u~||_1 between samples.
  double contraction = 1e-8;
};

/// One report per solver invariant over a trajectory: mass identity,
/// maximum principle, and, for nonnegative data, monotonicity and gradient
/// decay for p in {1, 2, inf}; L1 contraction when a comparison run exists.
/// worst_ratio holds the worst normalized margin.
std::vector<InequalityReport> solver_invariant_reports(const Trajectory& trajectory,
                                                       const InvariantTolerances& tol = {});

}  // namespace fracburgers
