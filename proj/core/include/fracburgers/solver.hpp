#pragma once

#include <optional>
#include <vector>

#include "fracburgers/field.hpp"
#include "fracburgers/flux.hpp"
#include "fracburgers/levy_symbol.hpp"

namespace fracburgers {

/// Point mass of the initial measure.
struct Atom {
  double location;
  double weight;
};

/// u_0(x) = u_minus + int_{-inf}^x m(dy), with m a sampled density, a finite
/// list of atoms, or both.
class InitialDatum {
 public:
  static InitialDatum zero(const Grid& grid, double u_minus = 0.0);
  static InitialDatum from_density(double u_minus, Field density);
  static InitialDatum from_atoms(const Grid& grid, double u_minus, std::vector<Atom> atoms);
  InitialDatum with_atoms(std::vector<Atom> atoms) const;

  const Grid& grid() const { return density_.grid(); }
  double u_minus() const { return u_minus_; }
  double u_plus() const { return u_minus_ + signed_mass(); }
  /// int m.
  double signed_mass() const;
  /// ||m|| = |m|(R).
  double total_variation() const;
  bool nonnegative() const;

  const Field& density() const { return density_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  InitialDatum(double u_minus, Field density, std::vector<Atom> atoms);

  double u_minus_;
  Field density_;
  std::vector<Atom> atoms_;
};

struct SolverConfig {
  Grid grid;
  LevySymbol symbol;
  Flux flux = Flux::burgers();
  double dt = 0.01;
  double t_end = 1.0;
  /// Times at which run() records states; t_end is always recorded.
  std::vector<double> sample_times = {};
  bool dealias = true;
  /// Disables the advective term (pure linear check).
  bool nonlinear = true;
};

struct SolverState {
  double t = 0.0;
  /// v = u_x samples.
  Field v;
  double u_minus = 0.0;
  double u_plus = 0.0;
  /// int m at t = 0, the conserved mass.
  double initial_mass = 0.0;
  /// ||m||.
  double initial_variation = 0.0;
};

/// Width (standard deviation) of the Gaussian used to mollify atoms.
inline double mollifier_width(const Grid& grid) { return 3.0 * grid.dx(); }

/// Mass-preserving discrete Gaussian of width 3 dx centred at `location`.
Field mollified_atom(const Grid& grid, double location, double weight);

/// Largest dt allowed by the advective CFL 0.5 dx / speed bound.
double cfl_limit(const Grid& grid, double speed_bound);

SolverState init(const InitialDatum& datum, const SolverConfig& config);

/// u = u_minus + cumulative trapezoid integral of v from the left edge.
Field reconstruct_u(const SolverState& state);

/// Integrating-factor RK4 stepper for  v_t + A v + (f'(u) v)_x = 0,
/// A the Levy symbol, u = u_minus + int_{-L}^x v.
class GradientSolver {
 public:
  explicit GradientSolver(SolverConfig config);

  const SolverConfig& config() const { return config_; }

  /// One step of the configured dt.
  SolverState step(const SolverState& state);
  /// One step of an arbitrary size h in (0, dt].
  SolverState step(const SolverState& state, double h);
  /// Steps until `t_target`, shortening the last step to land on it.
  SolverState advance_to(const SolverState& state, double t_target);

 private:
  void nonlinear_term(const std::vector<Complex>& v_hat, double u_minus,
                      std::vector<Complex>& out);
  const std::vector<double>& propagator(double h);

  SolverConfig config_;
  std::vector<double> symbol_values_;
  double cached_h_ = -1.0;
  std::vector<double> full_;
  std::vector<double> half_;
  std::vector<Complex> k1_, k2_, k3_, k4_, stage_;
  std::vector<double> v_phys_, u_phys_, product_;
  double sup_u_ = 0.0;
};

/// Free-function form of one solver step.
SolverState step(const SolverState& state, const SolverConfig& config);

struct Diagnostics {
  double t = 0.0;
  /// int v dx.
  double mass = 0.0;
  double min_v = 0.0;
  double max_v = 0.0;
  /// ||u||_inf.
  double sup_u = 0.0;
  /// ||u - u~||_1 against the comparison run (NaN without one).
  double l1_contraction = 0.0;
  /// int_{|x| > L/2} |v| dx.
  double escaped_mass = 0.0;
};

struct Trajectory {
  std::vector<SolverState> states;
  std::vector<Diagnostics> diagnostics;
  /// States of the comparison run at the same times, when requested.
  std::vector<SolverState> comparison;
  /// Whether the rarefaction fan [u_- t_end, u_+ t_end] with a 50% margin
  /// stays inside [-L/2, L/2].
  bool box_ok = true;
};

/// Composes init and step, recording states and diagnostics at t = 0, every
/// sample time and t_end. An optional second datum is evolved alongside for
/// L1-contraction diagnostics.
Trajectory run(const InitialDatum& datum, const SolverConfig& config,
               const std::optional<InitialDatum>& comparison = std::nullopt);

Diagnostics diagnose(const SolverState& state, const SolverState* comparison);

bool fan_fits_box(const Grid& grid, double u_minus, double u_plus, double t_end);

}  // namespace fracburgers
