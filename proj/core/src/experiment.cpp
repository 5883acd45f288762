#include "fracburgers/experiment.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/norms.hpp"
#include "fracburgers/reference_waves.hpp"

namespace fracburgers {
namespace {

void require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw ValidationError(
        fmt::format("alpha = {} outside the admissible range (1, 2)", alpha));
  }
}

}  // namespace

double critical_exponent(double alpha) {
  require_alpha(alpha);
  return (3.0 - alpha) / (alpha - 1.0);
}

double predicted_exponent(double alpha, double p) {
  require_alpha(alpha);
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return -(alpha - 1.0 - (3.0 - alpha) * inv_p) / 2.0;
}

ExperimentResult rarefaction_rate_experiment(double alpha, double p, const InitialDatum& datum,
                                         const SolverConfig& config) {
  const double critical = critical_exponent(alpha);
  if (!(p > critical)) {
    throw ValidationError(fmt::format(
        "p = {} violates the hypothesis p > (3-alpha)/(alpha-1) = {} for alpha = {}", p,
        critical, alpha));
  }
  if (!(datum.u_minus() < datum.u_plus())) {
    throw ValidationError(fmt::format("need u_- < u_+, got u_- = {}, u_+ = {}",
                                      datum.u_minus(), datum.u_plus()));
  }

  ExperimentResult out;
  out.alpha = alpha;
  out.p = p;
  out.predicted = predicted_exponent(alpha, p);
  out.trajectory = run(datum, config);
  out.box_ok = out.trajectory.box_ok;

  const RarefactionWave rarefaction(datum.u_minus(), datum.u_plus());
  const ViscousWave viscous(datum.u_minus(), datum.u_plus());
  std::vector<double> times, norms;
  for (const SolverState& state : out.trajectory.states) {
    if (!(state.t > 0.0)) continue;
    const Field u = reconstruct_u(state);
    ExperimentRow row;
    row.t = state.t;
    row.norm = lp_norm(u - rarefaction.sample(config.grid, state.t), p);
    row.viscous_distance = lp_norm(u - viscous.sample(config.grid, state.t), p);
    out.table.push_back(row);
    times.push_back(row.t);
    norms.push_back(row.norm);
  }
  if (out.table.empty()) throw ValidationError("rarefaction_rate_experiment: no positive sample times");

  const ExperimentRow& first = out.table.front();
  const double constant =
      first.norm / (std::pow(first.t, out.predicted) * std::log(2.0 + first.t));
  for (ExperimentRow& row : out.table) {
    row.predicted_bound = constant * std::pow(row.t, out.predicted) * std::log(2.0 + row.t);
  }

  out.fit = fit_decay(times, norms, true);
  out.uncorrected_fit = fit_decay(times, norms, false);
  out.gap = out.fit.exponent - out.predicted;
  return out;
}

std::vector<InequalityReport> solver_invariant_reports(const Trajectory& trajectory,
                                                       const InvariantTolerances& tol) {
  if (trajectory.states.empty()) throw ValidationError("solver_invariant_reports: empty trajectory");
  const SolverState& first = trajectory.states.front();
  const Diagnostics& d0 = trajectory.diagnostics.front();
  const bool monotone = lp_norm(first.v, kInfinity) == 0.0 ||
                        first.initial_variation <= std::abs(first.initial_mass) * (1.0 + 1e-12);
  const bool nonnegative = monotone && first.initial_mass >= 0.0;

  std::vector<InequalityReport> out;
  auto report = [&](std::string name, double start) {
    InequalityReport r;
    r.name = std::move(name);
    r.worst_ratio = start;
    return r;
  };

  InequalityReport mass = report("mass_identity", 0.0);
  InequalityReport maxp = report("max_principle", -kInfinity);
  for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
    const Diagnostics& d = trajectory.diagnostics[k];
    const double m0 = first.initial_mass;
    const double drift = m0 != 0.0 ? std::abs(d.mass - m0) / std::abs(m0) : std::abs(d.mass);
    ++mass.count;
    if (drift > mass.worst_ratio) {
      mass.worst_ratio = drift;
      mass.worst_index = k;
    }
    if (drift > tol.mass) ++mass.violations;
    const double growth = d.sup_u - d0.sup_u;
    ++maxp.count;
    if (growth > maxp.worst_ratio) {
      maxp.worst_ratio = growth;
      maxp.worst_index = k;
    }
    if (growth > tol.max_principle) ++maxp.violations;
  }
  out.push_back(mass);
  out.push_back(maxp);

  if (nonnegative) {
    InequalityReport mono = report("monotonicity", kInfinity);
    for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
      const double scale = lp_norm(trajectory.states[k].v, kInfinity);
      const double min_v = trajectory.diagnostics[k].min_v;
      const double ratio = scale > 0.0 ? min_v / scale : 0.0;
      ++mono.count;
      if (ratio < mono.worst_ratio) {
        mono.worst_ratio = ratio;
        mono.worst_index = k;
      }
      if (min_v < -tol.monotonicity * scale) ++mono.violations;
    }
    out.push_back(mono);

    for (double p : {1.0, 2.0, kInfinity}) {
      InequalityReport dec = report(fmt::format("gradient_decay(p={})", p), 0.0);
      const double m = first.initial_mass;
      for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
        const SolverState& s = trajectory.states[k];
        if (s.t < 1.0 || m <= 0.0) continue;
        const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
        const double ratio =
            std::pow(s.t, 1.0 - inv_p) * lp_norm(s.v, p) / std::pow(m, inv_p);
        ++dec.count;
        if (ratio > dec.worst_ratio) {
          dec.worst_ratio = ratio;
          dec.worst_index = k;
        }
        if (ratio > tol.gradient_slack) ++dec.violations;
      }
      dec.implied_constant = dec.worst_ratio;
      out.push_back(dec);
    }
  }

  if (!trajectory.comparison.empty()) {
    InequalityReport l1 = report("l1_contraction", -kInfinity);
    for (std::size_t k = 1; k < trajectory.diagnostics.size(); ++k) {
      const double rise =
          trajectory.diagnostics[k].l1_contraction - trajectory.diagnostics[k - 1].l1_contraction;
      ++l1.count;
      if (rise > l1.worst_ratio) {
        l1.worst_ratio = rise;
        l1.worst_index = k;
      }
      if (rise > tol.contraction) ++l1.violations;
    }
    out.push_back(l1);
  }
  return out;
}

}  // namespace fracburgers
