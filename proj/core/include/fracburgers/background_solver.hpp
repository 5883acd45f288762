#pragma once

#include "fracburgers/field.hpp"
#include "fracburgers/solver.hpp"

namespace fracburgers {

/// Cross-validation formulation on u itself: u = phi + w with the fixed
/// background phi(x) = (u_- + u_+)/2 + (u_+ - u_-)/2 tanh(x) and w periodic,
///
///   w_t + A w = -A phi - f'(phi + w) (phi_x + w_x),
///
/// advanced by the same integrating-factor RK4 as GradientSolver. A phi is
/// evaluated once through the singular-integral representation with the
/// exact far-field limits of phi.
class BackgroundSolver {
 public:
  BackgroundSolver(SolverConfig config, double u_minus, double u_plus);

  const SolverConfig& config() const { return config_; }
  const Field& background() const { return background_; }
  const Field& background_slope() const { return slope_; }
  /// A phi on the grid.
  const Field& background_operator() const { return operator_phi_; }

  /// One IF-RK4 step of size h in (0, dt]; returns phi + w.
  Field step(const Field& u, double h);
  /// Advances u from t_start to t_end.
  Field evolve(const Field& u, double t_start, double t_end);

 private:
  void rhs(const std::vector<Complex>& w_hat, std::vector<Complex>& out);

  SolverConfig config_;
  double u_minus_;
  double u_plus_;
  Field background_;
  Field slope_;
  Field operator_phi_;
  std::vector<Complex> forcing_hat_;
  std::vector<double> symbol_values_;
  std::vector<double> full_, half_;
  double cached_h_ = -1.0;
  std::vector<Complex> k1_, k2_, k3_, k4_, stage_, work_;
  std::vector<double> w_phys_, wx_phys_, product_;
};

/// Free-function form: one step of size dt for the background formulation.
Field step_background(const Field& u, const SolverConfig& config, double dt,
                      double u_minus, double u_plus);

}  // namespace fracburgers
