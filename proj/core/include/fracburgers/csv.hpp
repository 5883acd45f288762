#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracburgers/decay_fit.hpp"
#include "fracburgers/experiment.hpp"
#include "fracburgers/inequalities.hpp"
#include "fracburgers/reference_waves.hpp"
#include "fracburgers/solver.hpp"
#include "fracburgers/stable_kernel.hpp"

namespace fracburgers::csv {

/// 17 significant digits; infinities spelled "inf" / "-inf".
std::string format_number(double value);

/// Comma-separated writer with '#'-prefixed comment lines.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  /// Each line of `text` becomes one comment line.
  void comment(std::string_view text);
  void header(std::initializer_list<std::string_view> columns);
  void header(std::span<const std::string> columns);
  void row(std::initializer_list<double> values);
  /// Cells containing commas, quotes or newlines are double-quoted.
  void cells(std::span<const std::string> values);

 private:
  std::ostream& out_;
};

/// Columns (t, x, u, v) for every recorded state.
void write_trajectory(std::ostream& out, const Trajectory& trajectory,
                      std::string_view preamble = {});

/// Columns (t, mass, min_v, sup_u, l1_contraction).
void write_diagnostics(std::ostream& out, const Trajectory& trajectory,
                       std::string_view preamble = {});

/// Columns (y, P_alpha).
void write_kernel_profile(std::ostream& out, const StableKernel& kernel,
                          std::span<const double> ys, std::string_view preamble = {});

/// Columns (x, w, w^R) at time t.
void write_wave_profile(std::ostream& out, const ViscousWave& wave, const Grid& grid, double t,
                        std::string_view preamble = {});

void write_inequality_reports(std::ostream& out, std::span<const InequalityReport> reports,
                              std::string_view preamble = {});

/// One row per named fit.
struct NamedFit {
  std::string name;
  DecayFit fit;
  double predicted;
};
void write_decay_fits(std::ostream& out, std::span<const NamedFit> fits,
                      std::string_view preamble = {});

/// Columns (t, norm, predicted_bound, viscous_distance).
void write_experiment_table(std::ostream& out, const ExperimentResult& result,
                            std::string_view preamble = {});

}  // namespace fracburgers::csv
