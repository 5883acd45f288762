#include "fracburgers/background_solver.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/spectral.hpp"

namespace fracburgers {
namespace {

Field symbol_on_background(const Grid& grid, const LevySymbol& symbol, double mid,
                           double half) {
  auto phi = [mid, half](double x) { return mid + half * std::tanh(x); };
  // -phi'' for the local part and for alpha_j = 2.
  const Field minus_phi_xx = Field::from_function(grid, [half](double x) {
    const double t = std::tanh(x);
    return 2.0 * half * t * (1.0 - t * t);
  });
  Field out = symbol.local_coefficient() * minus_phi_xx;
  const FarField far{mid - half, mid + half};
  for (const auto& term : symbol.terms()) {
    if (term.alpha == 2.0) {
      out = out + term.coefficient * minus_phi_xx;
    } else if (term.alpha > 1.0 && term.alpha < 2.0) {
      const double c = calibrate_c_alpha(term.alpha);
      out = out + term.coefficient *
                      apply_fractional_laplacian_integral(grid, phi, term.alpha, c, far);
    } else {
      throw ValidationError(fmt::format(
          "BackgroundSolver: symbol exponent {} outside (1, 2]", term.alpha));
    }
  }
  return out;
}

}  // namespace

BackgroundSolver::BackgroundSolver(SolverConfig config, double u_minus, double u_plus)
    : config_(std::move(config)),
      u_minus_(u_minus),
      u_plus_(u_plus),
      background_(Field::zeros(config_.grid)),
      slope_(Field::zeros(config_.grid)),
      operator_phi_(Field::zeros(config_.grid)) {
  if (!(config_.dt > 0.0)) throw ValidationError("BackgroundSolver: dt must be > 0");
  const Grid& g = config_.grid;
  const double mid = 0.5 * (u_minus + u_plus);
  const double half = 0.5 * (u_plus - u_minus);
  background_ = Field::from_function(g, [=](double x) { return mid + half * std::tanh(x); });
  slope_ = Field::from_function(g, [=](double x) {
    const double t = std::tanh(x);
    return half * (1.0 - t * t);
  });
  operator_phi_ = symbol_on_background(g, config_.symbol, mid, half);
  forcing_hat_ = (-operator_phi_).spectrum();

  const std::size_t m = g.spectral_size();
  symbol_values_.resize(m);
  for (std::size_t k = 0; k < m; ++k) symbol_values_[k] = config_.symbol(g.wavenumber(k));
  full_.resize(m);
  half_.resize(m);
  for (auto* v : {&k1_, &k2_, &k3_, &k4_, &stage_, &work_}) v->resize(m);
  w_phys_.resize(g.size());
  wx_phys_.resize(g.size());
  product_.resize(g.size());
}

void BackgroundSolver::rhs(const std::vector<Complex>& w_hat, std::vector<Complex>& out) {
  const Grid& g = config_.grid;
  const std::size_t n = g.size();
  auto& fft = thread_local_fft(n);

  work_ = w_hat;
  if (config_.dealias) dealias_two_thirds(work_);
  fft.inverse(work_, w_phys_);
  const std::size_t nyquist = n / 2;
  for (std::size_t k = 0; k < work_.size(); ++k) {
    work_[k] *= (k == nyquist) ? Complex(0.0) : Complex(0.0, g.wavenumber(k));
  }
  fft.inverse(work_, wx_phys_);

  if (config_.nonlinear) {
    for (std::size_t i = 0; i < n; ++i) {
      const double u = background_[i] + w_phys_[i];
      product_[i] = config_.flux.speed(u) * (slope_[i] + wx_phys_[i]);
    }
    fft.forward(product_, out);
    if (config_.dealias) dealias_two_thirds(out);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = forcing_hat_[k] - out[k];
  } else {
    out = forcing_hat_;
  }
}

Field BackgroundSolver::step(const Field& u, double h) {
  if (!(h > 0.0) || h > config_.dt * (1.0 + 1e-12)) {
    throw ValidationError("BackgroundSolver::step: step size must lie in (0, dt]");
  }
  require_same_grid(u, background_, "BackgroundSolver::step");
  if (h != cached_h_) {
    for (std::size_t k = 0; k < symbol_values_.size(); ++k) {
      full_[k] = std::exp(-h * symbol_values_[k]);
      half_[k] = std::exp(-0.5 * h * symbol_values_[k]);
    }
    cached_h_ = h;
  }
  const std::vector<Complex> a = (u - background_).spectrum();
  const std::size_t m = a.size();
  rhs(a, k1_);
  for (std::size_t k = 0; k < m; ++k) stage_[k] = half_[k] * (a[k] + 0.5 * h * k1_[k]);
  rhs(stage_, k2_);
  for (std::size_t k = 0; k < m; ++k) stage_[k] = half_[k] * a[k] + 0.5 * h * k2_[k];
  rhs(stage_, k3_);
  for (std::size_t k = 0; k < m; ++k) stage_[k] = full_[k] * a[k] + h * half_[k] * k3_[k];
  rhs(stage_, k4_);
  std::vector<Complex> next(m);
  for (std::size_t k = 0; k < m; ++k) {
    next[k] = full_[k] * a[k] +
              (h / 6.0) * (full_[k] * k1_[k] + 2.0 * half_[k] * (k2_[k] + k3_[k]) + k4_[k]);
  }
  for (const auto& c : next) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw NumericalError("BackgroundSolver::step: non-finite spectrum");
    }
  }
  return background_ + Field::from_spectrum(config_.grid, std::move(next));
}

Field BackgroundSolver::evolve(const Field& u, double t_start, double t_end) {
  Field cur = u;
  double t = t_start;
  const double eps = 1e-12 * std::max(1.0, t_end);
  while (t < t_end - eps) {
    const double h = std::min(config_.dt, t_end - t);
    cur = step(cur, h);
    t += h;
  }
  return cur;
}

Field step_background(const Field& u, const SolverConfig& config, double dt, double u_minus,
                      double u_plus) {
  SolverConfig c = config;
  c.dt = dt;
  BackgroundSolver solver(std::move(c), u_minus, u_plus);
  return solver.step(u, dt);
}

}  // namespace fracburgers
