#pragma once

#include <span>

#include "fracburgers/decay_fit.hpp"
#include "fracburgers/field.hpp"

namespace fracburgers {

/// Entropy solution W^R(x/t) of the inviscid Riemann problem, u_- < u_+.
class RarefactionWave {
 public:
  RarefactionWave(double u_minus, double u_plus);

  double u_minus() const { return u_minus_; }
  double u_plus() const { return u_plus_; }

  double operator()(double x, double t) const;
  Field sample(const Grid& grid, double t) const;

 private:
  double u_minus_;
  double u_plus_;
};

/// Solution of w_t - w_xx + w w_x = 0 with Riemann data, from the Cole-Hopf
/// transform:
///
///   w = (u_- G_- + u_+ G_+) / (G_- + G_+),
///   G_- = exp(-u_- x/2 + u_-^2 t/4) erfc((x - u_- t)/sqrt(4t)) / 2,
///   G_+ = exp(-u_+ x/2 + u_+^2 t/4) erfc((u_+ t - x)/sqrt(4t)) / 2,
///
/// combined in the log domain.
class ViscousWave {
 public:
  ViscousWave(double u_minus, double u_plus);

  double u_minus() const { return u_minus_; }
  double u_plus() const { return u_plus_; }

  double value(double x, double t) const;
  double dx(double x, double t) const;
  double dxx(double x, double t) const;

  Field sample(const Grid& grid, double t) const;

 private:
  struct Parts {
    double sigma;  // G_+ / (G_- + G_+)
    double r_x;    // d/dx log(G_+/G_-)
    double r_xx;
  };
  Parts parts(double x, double t, bool derivatives) const;

  double u_minus_;
  double u_plus_;
};

struct ViscousRates {
  double p = 0.0;
  DecayFit difference;  // ||w - w^R||_p
  DecayFit gradient;    // ||w_x||_p
  DecayFit curvature;   // ||w_xx||_p
  double predicted_difference = 0.0;  // -(1-1/p)/2
  double predicted_gradient = 0.0;    // -1 + 1/p
  double predicted_curvature = 0.0;   // -3/2 + 1/(2p)
};

/// Norm on the whole line of w - w^R, w_x and w_xx at time t.
struct ViscousNorms {
  double difference;
  double gradient;
  double curvature;
};
ViscousNorms viscous_norms(const ViscousWave& w, double p, double t);

/// Rejects t < 1 and ranges shorter than two decades.
ViscousRates verify_viscous_rates(const ViscousWave& w, double p,
                                  std::span<const double> times);

}  // namespace fracburgers
