#include "fracburgers/csv.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fracburgers/norms.hpp"

namespace fracburgers::csv {

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  return fmt::format("{:.17g}", value);
}

void Writer::comment(std::string_view text) {
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!(line.empty() && end == std::string_view::npos && start > 0)) {
      out_ << '#';
      if (!line.empty()) out_ << ' ' << line;
      out_ << '\n';
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

void Writer::header(std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (auto c : columns) {
    if (!first) out_ << ',';
    out_ << c;
    first = false;
  }
  out_ << '\n';
}

void Writer::header(std::span<const std::string> columns) { cells(columns); }

void Writer::row(std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out_ << ',';
    out_ << format_number(v);
    first = false;
  }
  out_ << '\n';
}

void Writer::cells(std::span<const std::string> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    const std::string& v = values[i];
    if (v.find_first_of(",\"\n") == std::string::npos) {
      out_ << v;
      continue;
    }
    out_ << '"';
    for (char c : v) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  }
  out_ << '\n';
}

namespace {

Writer start(std::ostream& out, std::string_view preamble) {
  Writer w(out);
  if (!preamble.empty()) w.comment(preamble);
  return w;
}

}  // namespace

void write_trajectory(std::ostream& out, const Trajectory& trajectory,
                      std::string_view preamble) {
  Writer w = start(out, preamble);
  w.header({"t", "x", "u", "v"});
  for (const SolverState& s : trajectory.states) {
    const Field u = reconstruct_u(s);
    const Grid& g = s.v.grid();
    for (std::size_t i = 0; i < g.size(); ++i) w.row({s.t, g.x(i), u[i], s.v[i]});
  }
}

void write_diagnostics(std::ostream& out, const Trajectory& trajectory,
                       std::string_view preamble) {
  Writer w = start(out, preamble);
  w.header({"t", "mass", "min_v", "sup_u", "l1_contraction", "mass_drift", "escaped_mass"});
  for (const Diagnostics& d : trajectory.diagnostics) {
    const double m0 = trajectory.states.front().initial_mass;
    const double drift = m0 != 0.0 ? std::abs(d.mass - m0) / std::abs(m0) : std::abs(d.mass);
    w.row({d.t, d.mass, d.min_v, d.sup_u, d.l1_contraction, drift, d.escaped_mass});
  }
}

void write_kernel_profile(std::ostream& out, const StableKernel& kernel,
                          std::span<const double> ys, std::string_view preamble) {
  Writer w = start(out, preamble);
  w.header({"y", "P_alpha"});
  for (double y : ys) w.row({y, kernel.profile(y)});
}

void write_wave_profile(std::ostream& out, const ViscousWave& wave, const Grid& grid, double t,
                        std::string_view preamble) {
  Writer w = start(out, preamble);
  const RarefactionWave rarefaction(wave.u_minus(), wave.u_plus());
  w.header({"x", "w", "w^R"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    w.row({x, wave.value(x, t), rarefaction(x, t)});
  }
}

void write_inequality_reports(std::ostream& out, std::span<const InequalityReport> reports,
                              std::string_view preamble) {
  Writer w = start(out, preamble);
  w.header({"name", "count", "rejected", "worst_ratio", "implied_constant", "violations",
            "worst_index"});
  for (const InequalityReport& r : reports) {
    const std::vector<std::string> row = {
        r.name,
        std::to_string(r.count),
        std::to_string(r.rejected),
        format_number(r.worst_ratio),
        format_number(r.implied_constant),
        std::to_string(r.violations),
        std::to_string(r.worst_index)};
    w.cells(row);
  }
}

void write_decay_fits(std::ostream& out, std::span<const NamedFit> fits,
                      std::string_view preamble) {
  Writer w = start(out, preamble);
  w.header({"name", "exponent", "predicted", "intercept", "residual_rms", "t_min", "t_max",
            "samples", "log_corrected"});
  for (const NamedFit& f : fits) {
    const std::vector<std::string> row = {f.name,
                                          format_number(f.fit.exponent),
                                          format_number(f.predicted),
                                          format_number(f.fit.intercept),
                                          format_number(f.fit.residual_rms),
                                          format_number(f.fit.t_min),
                                          format_number(f.fit.t_max),
                                          std::to_string(f.fit.samples),
                                          f.fit.log_corrected ? "1" : "0"};
    w.cells(row);
  }
}

void write_experiment_table(std::ostream& out, const ExperimentResult& result,
                            std::string_view preamble) {
  Writer w = start(out, preamble);
  w.header({"t", "norm", "predicted_bound", "viscous_distance"});
  for (const ExperimentRow& r : result.table) {
    w.row({r.t, r.norm, r.predicted_bound, r.viscous_distance});
  }
}

}  // namespace fracburgers::csv
