#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "fracburgers/csv.hpp"
#include "fracburgers/errors.hpp"
#include "fracburgers/experiment.hpp"
#include "fracburgers/inequalities.hpp"
#include "fracburgers/norms.hpp"
#include "fracburgers/reference_waves.hpp"
#include "fracburgers/solver.hpp"
#include "fracburgers/stable_kernel.hpp"
#include "plot_scripts.hpp"

namespace fracburgers::cli {
namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError(fmt::format("cannot write {}", path.string()));
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
}

std::string preamble(const Context& ctx, const std::string& command) {
  return fmt::format("fracburgers {}\n{}", command, to_ini(ctx.config, command));
}

Field sech2_density(const Grid& grid, double mass) {
  return Field::from_function(grid, [mass](double x) {
    const double c = std::cosh(x);
    return 0.5 * mass / (c * c);
  });
}

void print_reports(const std::vector<InequalityReport>& reports) {
  for (const auto& r : reports) {
    fmt::print("  {:<36} n={:<4} rejected={:<4} worst={:<12.6g} violations={}\n", r.name,
               r.count, r.rejected, r.worst_ratio, r.violations);
  }
}

// Runs jobs[i]() on up to `threads` workers; results keep job order.
template <typename Result>
std::vector<Result> fan_out(std::vector<std::function<Result()>> jobs, std::size_t threads) {
  std::vector<std::optional<Result>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::mutex mutex;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mutex);
        if (next == jobs.size()) return;
        i = next++;
      }
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t count = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace

int cmd_simulate(const Context& ctx) {
  const SimulateSettings& s = ctx.config.simulate;
  const Grid grid(s.half_length, s.points);
  SolverConfig config{grid, LevySymbol(s.local_diffusion, {{1.0, s.alpha}})};
  config.flux = Flux::from_name(s.flux);
  config.dt = s.dt;
  config.t_end = s.t_end;
  config.sample_times = s.samples;
  config.dealias = s.dealias;

  const double mass = s.u_plus - s.u_minus;
  InitialDatum datum = InitialDatum::zero(grid, s.u_minus);
  if (s.datum == "delta") datum = InitialDatum::from_atoms(grid, s.u_minus, {{0.0, mass}});
  if (s.datum == "tanh") datum = InitialDatum::from_density(s.u_minus, sech2_density(grid, mass));

  const Trajectory trajectory = run(datum, config);
  fs::create_directories(ctx.out_dir);
  const std::string head = preamble(ctx, "simulate");
  {
    auto out = open_output(ctx.out_dir / "trajectory.csv");
    csv::write_trajectory(out, trajectory, head);
  }
  {
    auto out = open_output(ctx.out_dir / "diagnostics.csv");
    csv::write_diagnostics(out, trajectory, head);
  }
  const bool with_wave = s.u_minus < s.u_plus;
  if (with_wave) {
    auto out = open_output(ctx.out_dir / "wave_profile.csv");
    csv::write_wave_profile(out, ViscousWave(s.u_minus, s.u_plus), grid, s.t_end, head);
  }
  write_text(ctx.out_dir / "plot_simulate.py",
             simulate_plot_script(s.u_minus, s.u_plus, with_wave));

  const auto reports = solver_invariant_reports(trajectory);
  fmt::print("simulate: {} samples up to t = {}, box {}\n", trajectory.states.size(), s.t_end,
             trajectory.box_ok ? "ok" : "too small for the fan");
  print_reports(reports);
  return kExitOk;
}

int cmd_kernel(const Context& ctx) {
  const KernelSettings& k = ctx.config.kernel;
  KernelQuadrature quadrature;
  quadrature.max_panel_phase = k.max_panel_phase;
  const StableKernel kernel(k.alpha, quadrature);
  const auto ys = kernel_evaluation_grid(k.extent, k.core, k.fine, k.growth);
  const KernelBoundsReport bounds = verify_kernel_bounds(kernel, ys);
  const double mass = kernel_mass(kernel, ys);
  const double full_mass = kernel_mass(kernel, ys, true);

  fs::create_directories(ctx.out_dir);
  const std::string head = preamble(ctx, "kernel");
  {
    auto out = open_output(ctx.out_dir / "kernel_profile.csv");
    csv::write_kernel_profile(out, kernel, ys, head);
  }
  {
    auto out = open_output(ctx.out_dir / "kernel_bounds.csv");
    csv::Writer w(out);
    w.comment(head);
    w.header({"alpha", "c0", "c1", "min_raw_value", "negative_count", "y_extent", "mass",
              "mass_with_tails"});
    w.row({k.alpha, bounds.c0, bounds.c1, bounds.min_raw_value,
           static_cast<double>(bounds.negative_count), bounds.y_extent, mass, full_mass});
  }
  write_text(ctx.out_dir / "plot_kernel.py", kernel_plot_script(k.alpha));

  fmt::print(
      "kernel: alpha = {}, C0 = {:.6g}, C1 = {:.6g}, min P = {:.3g}, mass = {:.10f} ({:.10f} "
      "with tails)\n",
      k.alpha, bounds.c0, bounds.c1, bounds.min_raw_value, mass, full_mass);
  if (bounds.negative_count > 0) {
    fmt::print(stderr, "kernel: {} samples below -1e-10\n", bounds.negative_count);
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_verify(const Context& ctx) {
  const VerifySettings& v = ctx.config.verify;
  const Grid grid(v.half_length, v.points);

  std::vector<Field> corpus;
  if (v.corpus == "constant") {
    for (std::size_t i = 0; i < v.corpus_size; ++i) corpus.push_back(Field::constant(grid, 1.0));
  } else {
    for (const auto& member : random_corpus(v.corpus_size, v.seed)) {
      corpus.push_back(realize(member, grid));
    }
  }

  SuiteOptions options;
  options.alpha = v.alpha;
  options.hyper_exponents = v.hyper_exponents;
  options.interpolation_exponents = v.interpolation_exponents;
  options.gn_pairs = v.gn_pairs;
  options.tolerance = v.tolerance;
  std::vector<InequalityReport> reports = run_inequality_suite(corpus, options);

  if (v.solver_checks) {
    const Grid solver_grid(v.solver_half_length, v.solver_points);
    SolverConfig config{solver_grid, LevySymbol::fractional(v.alpha)};
    config.dt = v.solver_dt;
    config.t_end = v.solver_t_end;
    for (double t = 0.25; t < v.solver_t_end; t *= 1.5) config.sample_times.push_back(t);
    const auto datum = InitialDatum::from_density(-1.0, sech2_density(solver_grid, 2.0));
    // u~_0 = u_0 + 0.3 exp(-x^2)/sqrt(pi), still non-decreasing.
    const auto bumped = InitialDatum::from_density(
        -1.0, Field::from_function(solver_grid, [](double x) {
          const double c = std::cosh(x);
          return 1.0 / (c * c) - 0.6 * x * std::exp(-x * x) / std::sqrt(M_PI);
        }));
    const Trajectory trajectory = run(datum, config, bumped);
    for (auto& r : solver_invariant_reports(trajectory)) reports.push_back(std::move(r));
  }

  fs::create_directories(ctx.out_dir);
  {
    auto out = open_output(ctx.out_dir / "inequalities.csv");
    csv::write_inequality_reports(out, reports, preamble(ctx, "verify"));
  }

  fmt::print("verify: {} fields, alpha = {}, tolerance = {}\n", corpus.size(), v.alpha,
             v.tolerance);
  print_reports(reports);
  const InequalityReport* worst = nullptr;
  std::size_t total = 0;
  for (const auto& r : reports) {
    total += r.violations;
    if (r.violations > 0 && (!worst || r.violations > worst->violations)) worst = &r;
  }
  if (worst) {
    fmt::print(stderr, "verify: {} violations; worst offender {} (member {}, ratio {:.6g})\n",
               total, worst->name, worst->worst_index, worst->worst_ratio);
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_rate(const Context& ctx) {
  const RateSettings& r = ctx.config.rate;
  const Grid grid(r.half_length, r.points);

  struct Job {
    double alpha;
    double p;
    std::string name;
  };
  std::vector<Job> jobs;
  for (double a : r.alphas) {
    for (double p : r.ps) {
      jobs.push_back({a, p, fmt::format("alpha={}_p={}", format_value(a), format_value(p))});
    }
  }

  std::vector<double> samples;
  for (std::size_t i = 0; i < r.samples; ++i) {
    samples.push_back(r.t_start *
                      std::pow(r.t_end / r.t_start, static_cast<double>(i) / (r.samples - 1)));
  }
  samples.back() = r.t_end;

  const std::string head = preamble(ctx, "rate");
  std::vector<std::function<ExperimentResult()>> tasks;
  for (const Job& job : jobs) {
    tasks.push_back([&, job] {
      SolverConfig config{grid, LevySymbol::fractional(job.alpha)};
      config.dt = r.dt;
      config.t_end = r.t_end;
      config.sample_times = samples;
      const auto datum =
          InitialDatum::from_density(r.u_minus, sech2_density(grid, r.u_plus - r.u_minus));
      ExperimentResult result = rarefaction_rate_experiment(job.alpha, job.p, datum, config);
      result.trajectory = {};
      const fs::path dir = ctx.out_dir / "rate" / job.name;
      fs::create_directories(dir);
      auto table = open_output(dir / "table.csv");
      csv::write_experiment_table(table, result,
                                  fmt::format("{}alpha = {}\np = {}\n", head,
                                              format_value(job.alpha), format_value(job.p)));
      auto fits = open_output(dir / "fit.csv");
      const std::vector<csv::NamedFit> named = {
          {"log_corrected", result.fit, result.predicted},
          {"uncorrected", result.uncorrected_fit, result.predicted}};
      csv::write_decay_fits(fits, named, head);
      return result;
    });
  }
  fs::create_directories(ctx.out_dir);
  const auto results = fan_out(std::move(tasks), ctx.threads);

  auto out = open_output(ctx.out_dir / "rate_summary.csv");
  csv::Writer w(out);
  w.comment(head);
  w.header({"alpha", "p", "predicted", "measured", "uncorrected", "gap", "box_ok", "pass"});
  bool all_pass = true;
  std::vector<std::string> dirs;
  fmt::print("rate: {} runs\n", results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& res = results[i];
    const bool pass = res.fit.exponent <= res.predicted + r.slack;
    all_pass = all_pass && pass;
    const std::vector<std::string> row = {
        format_value(res.alpha),           format_value(res.p),
        csv::format_number(res.predicted), csv::format_number(res.fit.exponent),
        csv::format_number(res.uncorrected_fit.exponent), csv::format_number(res.gap),
        res.box_ok ? "1" : "0",            pass ? "1" : "0"};
    w.cells(row);
    dirs.push_back("rate/" + jobs[i].name);
    fmt::print("  alpha = {:<4} p = {:<4} predicted {:+.4f} measured {:+.4f} (uncorrected {:+.4f}) {}\n",
               format_value(res.alpha), format_value(res.p), res.predicted, res.fit.exponent,
               res.uncorrected_fit.exponent, pass ? "pass" : "FAIL");
  }
  write_text(ctx.out_dir / "plot_rate.py", rate_plot_script(dirs));
  return all_pass ? kExitOk : kExitViolation;
}

}  // namespace fracburgers::cli
