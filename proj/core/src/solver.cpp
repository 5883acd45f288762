#include "fracburgers/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/log.hpp"
#include "fracburgers/norms.hpp"
#include "fracburgers/spectral.hpp"

namespace fracburgers {
namespace {

constexpr double kCflNumber = 0.5;

void check_density_decays(const Field& density) {
  const double peak = lp_norm(density, kInfinity);
  if (peak == 0.0) return;
  const auto v = density.values();
  const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
  if (edge > 1e-6 * peak) {
    throw ValidationError(fmt::format(
        "InitialDatum: density does not decay at the box edges ({:.3e} vs peak {:.3e})",
        edge, peak));
  }
}

double speed_bound(const Flux& flux, double amplitude) {
  return std::max(std::abs(flux.speed(-amplitude)), std::abs(flux.speed(amplitude)));
}

}  // namespace

InitialDatum::InitialDatum(double u_minus, Field density, std::vector<Atom> atoms)
    : u_minus_(u_minus), density_(std::move(density)), atoms_(std::move(atoms)) {
  if (!std::isfinite(u_minus_)) throw ValidationError("InitialDatum: u_minus must be finite");
  check_density_decays(density_);
  const double safe = 0.5 * density_.grid().half_length();
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.weight) || !std::isfinite(a.location)) {
      throw ValidationError("InitialDatum: atom with non-finite location or weight");
    }
    if (!(std::abs(a.location) < safe)) {
      throw ValidationError(fmt::format(
          "InitialDatum: atom at {} lies outside the safe region (-{}, {})", a.location,
          safe, safe));
    }
  }
}

InitialDatum InitialDatum::zero(const Grid& grid, double u_minus) {
  return InitialDatum(u_minus, Field::zeros(grid), {});
}

InitialDatum InitialDatum::from_density(double u_minus, Field density) {
  return InitialDatum(u_minus, std::move(density), {});
}

InitialDatum InitialDatum::from_atoms(const Grid& grid, double u_minus,
                                      std::vector<Atom> atoms) {
  return InitialDatum(u_minus, Field::zeros(grid), std::move(atoms));
}

InitialDatum InitialDatum::with_atoms(std::vector<Atom> atoms) const {
  std::vector<Atom> all = atoms_;
  all.insert(all.end(), atoms.begin(), atoms.end());
  return InitialDatum(u_minus_, density_, std::move(all));
}

double InitialDatum::signed_mass() const {
  double m = integral(density_);
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

double InitialDatum::total_variation() const {
  double m = lp_norm(density_, 1.0);
  for (const auto& a : atoms_) m += std::abs(a.weight);
  return m;
}

bool InitialDatum::nonnegative() const {
  for (double v : density_.values()) {
    if (v < 0.0) return false;
  }
  for (const auto& a : atoms_) {
    if (a.weight < 0.0) return false;
  }
  return true;
}

Field mollified_atom(const Grid& grid, double location, double weight) {
  const double width = mollifier_width(grid);
  std::vector<double> values(grid.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = (grid.x(i) - location) / width;
    values[i] = std::exp(-0.5 * r * r);
    sum += values[i];
  }
  const double scale = weight / (sum * grid.dx());
  for (double& v : values) v *= scale;
  return Field(grid, std::move(values));
}

double cfl_limit(const Grid& grid, double speed) {
  if (speed <= 0.0) return std::numeric_limits<double>::infinity();
  return kCflNumber * grid.dx() / speed;
}

SolverState init(const InitialDatum& datum, const SolverConfig& config) {
  if (!(datum.grid() == config.grid)) {
    throw ValidationError("init: datum and solver configuration use different grids");
  }
  Field v = datum.density();
  for (const auto& a : datum.atoms()) v = v + mollified_atom(config.grid, a.location, a.weight);

  SolverState state{0.0, v, datum.u_minus(), datum.u_plus(), integral(v),
                    datum.total_variation()};
  const Field u = reconstruct_u(state);
  const double amplitude = std::max({std::abs(state.u_minus), std::abs(state.u_plus),
                                     lp_norm(u, kInfinity)});
  const double limit = cfl_limit(config.grid, speed_bound(config.flux, amplitude));
  if (config.dt > limit) {
    throw ValidationError(fmt::format(
        "init: dt = {} violates the advective CFL bound {:.6g}", config.dt, limit));
  }
  return state;
}

Field reconstruct_u(const SolverState& state) {
  const Grid& g = state.v.grid();
  return Field(g, cumulative_trapezoid(state.v.values(), g.dx(), state.u_minus));
}

GradientSolver::GradientSolver(SolverConfig config) : config_(std::move(config)) {
  if (!(config_.dt > 0.0)) throw ValidationError("GradientSolver: dt must be > 0");
  const Grid& g = config_.grid;
  const std::size_t m = g.spectral_size();
  symbol_values_.resize(m);
  for (std::size_t k = 0; k < m; ++k) symbol_values_[k] = config_.symbol(g.wavenumber(k));
  k1_.resize(m);
  k2_.resize(m);
  k3_.resize(m);
  k4_.resize(m);
  stage_.resize(m);
  v_phys_.resize(g.size());
  u_phys_.resize(g.size());
  product_.resize(g.size());
  full_.resize(m);
  half_.resize(m);
}

const std::vector<double>& GradientSolver::propagator(double h) {
  if (h != cached_h_) {
    for (std::size_t k = 0; k < symbol_values_.size(); ++k) {
      full_[k] = std::exp(-h * symbol_values_[k]);
      half_[k] = std::exp(-0.5 * h * symbol_values_[k]);
    }
    cached_h_ = h;
  }
  return full_;
}

void GradientSolver::nonlinear_term(const std::vector<Complex>& v_hat, double u_minus,
                                    std::vector<Complex>& out) {
  if (!config_.nonlinear) {
    std::fill(out.begin(), out.end(), Complex(0.0));
    return;
  }
  const Grid& g = config_.grid;
  const std::size_t n = g.size();
  auto& fft = thread_local_fft(n);

  out = v_hat;
  if (config_.dealias) dealias_two_thirds(out);
  fft.inverse(out, v_phys_);

  const double dx = g.dx();
  double u = u_minus;
  double sup = std::abs(u);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) u += 0.5 * dx * (v_phys_[i - 1] + v_phys_[i]);
    u_phys_[i] = u;
    sup = std::max(sup, std::abs(u));
    product_[i] = config_.flux.speed(u) * v_phys_[i];
  }
  sup_u_ = sup;

  fft.forward(product_, out);
  if (config_.dealias) dealias_two_thirds(out);
  const std::size_t nyquist = n / 2;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] *= (k == nyquist) ? Complex(0.0) : Complex(0.0, -g.wavenumber(k));
  }
}

SolverState GradientSolver::step(const SolverState& state) { return step(state, config_.dt); }

SolverState GradientSolver::step(const SolverState& state, double h) {
  if (!(h > 0.0) || h > config_.dt * (1.0 + 1e-12)) {
    throw ValidationError("GradientSolver::step: step size must lie in (0, dt]");
  }
  if (!(state.v.grid() == config_.grid)) {
    throw ValidationError("GradientSolver::step: state grid differs from the configuration");
  }
  const std::vector<double>& e_full = propagator(h);
  const std::vector<double>& e_half = half_;
  const std::vector<Complex> a = state.v.spectrum();
  const std::size_t m = a.size();

  nonlinear_term(a, state.u_minus, k1_);
  if (config_.nonlinear) {
    const double limit = cfl_limit(config_.grid, speed_bound(config_.flux, sup_u_));
    if (h > limit * (1.0 + 1e-12)) {
      throw ValidationError(fmt::format(
          "GradientSolver::step: dt = {} violates the CFL bound {:.6g} at t = {}", h, limit,
          state.t));
    }
  }
  for (std::size_t k = 0; k < m; ++k) stage_[k] = e_half[k] * (a[k] + 0.5 * h * k1_[k]);
  nonlinear_term(stage_, state.u_minus, k2_);
  for (std::size_t k = 0; k < m; ++k) stage_[k] = e_half[k] * a[k] + 0.5 * h * k2_[k];
  nonlinear_term(stage_, state.u_minus, k3_);
  for (std::size_t k = 0; k < m; ++k) stage_[k] = e_full[k] * a[k] + h * e_half[k] * k3_[k];
  nonlinear_term(stage_, state.u_minus, k4_);

  std::vector<Complex> next(m);
  for (std::size_t k = 0; k < m; ++k) {
    next[k] = e_full[k] * a[k] +
              (h / 6.0) * (e_full[k] * k1_[k] + 2.0 * e_half[k] * (k2_[k] + k3_[k]) + k4_[k]);
  }
  for (const auto& c : next) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw NumericalError(fmt::format(
          "GradientSolver::step: non-finite spectrum after step from t = {} (h = {})",
          state.t, h));
    }
  }
  SolverState out = state;
  out.t = state.t + h;
  out.v = Field::from_spectrum(config_.grid, std::move(next));
  return out;
}

SolverState GradientSolver::advance_to(const SolverState& state, double t_target) {
  SolverState s = state;
  const double eps = 1e-12 * std::max(1.0, t_target);
  while (s.t < t_target - eps) {
    const double h = std::min(config_.dt, t_target - s.t);
    s = step(s, h);
  }
  s.t = std::max(s.t, t_target);
  return s;
}

SolverState step(const SolverState& state, const SolverConfig& config) {
  GradientSolver solver(config);
  return solver.step(state);
}

Diagnostics diagnose(const SolverState& state, const SolverState* comparison) {
  Diagnostics d;
  d.t = state.t;
  d.mass = integral(state.v);
  const auto v = state.v.values();
  d.min_v = *std::min_element(v.begin(), v.end());
  d.max_v = *std::max_element(v.begin(), v.end());
  const Field u = reconstruct_u(state);
  d.sup_u = lp_norm(u, kInfinity);
  const Grid& g = state.v.grid();
  double escaped = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g.x(i)) > 0.5 * g.half_length()) escaped += std::abs(v[i]);
  }
  d.escaped_mass = escaped * g.dx();
  if (comparison != nullptr) {
    d.l1_contraction = lp_norm(u - reconstruct_u(*comparison), 1.0);
  } else {
    d.l1_contraction = std::numeric_limits<double>::quiet_NaN();
  }
  return d;
}

bool fan_fits_box(const Grid& grid, double u_minus, double u_plus, double t_end) {
  const double reach =
      1.5 * std::max(std::abs(u_minus), std::abs(u_plus)) * t_end;
  return reach <= 0.5 * grid.half_length();
}

Trajectory run(const InitialDatum& datum, const SolverConfig& config,
               const std::optional<InitialDatum>& comparison) {
  if (!(config.t_end > 0.0)) throw ValidationError("run: t_end must be > 0");
  std::vector<double> times;
  for (double t : config.sample_times) {
    if (!(t > 0.0 && t <= config.t_end)) {
      throw ValidationError(fmt::format("run: sample time {} outside (0, t_end]", t));
    }
    times.push_back(t);
  }
  times.push_back(config.t_end);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  Trajectory traj;
  traj.box_ok = fan_fits_box(config.grid, datum.u_minus(), datum.u_plus(), config.t_end);
  if (!traj.box_ok) {
    log_warning(fmt::format(
        "run: rarefaction fan up to t = {} with 50% margin exceeds [-L/2, L/2], L = {}",
        config.t_end, config.grid.half_length()));
  }

  GradientSolver solver(config);
  GradientSolver companion(config);
  SolverState state = init(datum, config);
  std::optional<SolverState> other;
  if (comparison) other = init(*comparison, config);

  auto record = [&] {
    traj.states.push_back(state);
    traj.diagnostics.push_back(diagnose(state, other ? &*other : nullptr));
    if (other) traj.comparison.push_back(*other);
  };
  record();
  for (double t : times) {
    state = solver.advance_to(state, t);
    if (other) other = companion.advance_to(*other, t);
    record();
  }
  return traj;
}

}  // namespace fracburgers
