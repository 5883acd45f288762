#include <cmath>

#include <gtest/gtest.h>

#include "fracburgers/background_solver.hpp"
#include "fracburgers/errors.hpp"
#include "fracburgers/experiment.hpp"
#include "fracburgers/norms.hpp"
#include "fracburgers/solver.hpp"
#include "fracburgers/stable_kernel.hpp"

using namespace fracburgers;

namespace {

Field sech2(const Grid& g, double scale = 1.0) {
  return Field::from_function(g, [scale](double x) {
    const double c = std::cosh(x);
    return scale / (c * c);
  });
}

SolverConfig make_config(const Grid& g, double dt, double t_end, double alpha = 1.5) {
  SolverConfig c{g, LevySymbol::fractional(alpha)};
  c.dt = dt;
  c.t_end = t_end;
  return c;
}

}  // namespace

TEST(Init, DeltaDatumIsMollifiedSpikeOfMassTwo) {
  const Grid g(32.0, 1024);
  const auto datum = InitialDatum::from_atoms(g, -1.0, {{0.0, 2.0}});
  EXPECT_DOUBLE_EQ(datum.u_plus(), 1.0);
  const SolverState s = init(datum, make_config(g, 0.01, 1.0));
  EXPECT_NEAR(integral(s.v), 2.0, 1e-14);
  std::size_t peak = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (s.v[i] > s.v[peak]) peak = i;
  }
  EXPECT_EQ(g.x(peak), 0.0);
  // Width 3 dx: the spike is negligible ten widths away.
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g.x(i)) > 30.0 * g.dx()) {
      EXPECT_LT(s.v[i], 1e-20);
    }
  }
}

TEST(Init, ZeroDatum) {
  const Grid g(16.0, 256);
  const SolverState s = init(InitialDatum::zero(g), make_config(g, 0.01, 1.0));
  EXPECT_EQ(lp_norm(s.v, kInfinity), 0.0);
  EXPECT_EQ(lp_norm(reconstruct_u(s), kInfinity), 0.0);
}

TEST(Init, Sech2DensityReconstructsTanh) {
  const Grid g(32.0, 2048);
  const auto datum = InitialDatum::from_density(-1.0, sech2(g));
  EXPECT_NEAR(datum.u_plus(), 1.0, 1e-12);
  const Field u = reconstruct_u(init(datum, make_config(g, 0.01, 1.0)));
  for (std::size_t i = 0; i < g.size(); ++i) {
    // Cumulative trapezoid error is bounded by dx^2/12 * max|v'|.
    EXPECT_NEAR(u[i], std::tanh(g.x(i)), g.dx() * g.dx() / 12.0 * 0.8);
  }
}

TEST(Init, Rejections) {
  const Grid g(16.0, 256);
  EXPECT_THROW(InitialDatum::from_atoms(g, 0.0, {{9.0, 1.0}}), ValidationError);
  EXPECT_THROW(InitialDatum::from_atoms(g, 0.0, {{0.0, NAN}}), ValidationError);
  EXPECT_THROW(InitialDatum::from_density(0.0, Field::constant(g, 1.0)), ValidationError);
  const auto datum = InitialDatum::from_atoms(g, -1.0, {{0.0, 2.0}});
  EXPECT_THROW(init(datum, make_config(Grid(16.0, 512), 0.01, 1.0)), ValidationError);
  EXPECT_THROW(init(datum, make_config(g, 0.2, 1.0)), ValidationError);
}

TEST(Reconstruct, ZeroGradientGivesConstant) {
  const Grid g(8.0, 64);
  const SolverState s{0.0, Field::zeros(g), 0.7, 0.7, 0.0, 0.0};
  const Field u = reconstruct_u(s);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(u[i], 0.7);
}

TEST(Step, ZeroStateOnlyAdvancesTime) {
  const Grid g(16.0, 256);
  const auto config = make_config(g, 0.01, 1.0);
  const SolverState s0 = init(InitialDatum::zero(g, 0.3), config);
  const SolverState s1 = step(s0, config);
  EXPECT_DOUBLE_EQ(s1.t, 0.01);
  EXPECT_EQ(lp_norm(s1.v, kInfinity), 0.0);
}

TEST(Step, LinearStepIsTheSemigroup) {
  const Grid g(32.0, 1024);
  auto config = make_config(g, 0.02, 1.0);
  config.nonlinear = false;
  const SolverState s0 = init(InitialDatum::from_density(-1.0, sech2(g)), config);
  const SolverState s1 = step(s0, config);
  const Field expected = semigroup_apply(s0.v, 0.02, config.symbol);
  EXPECT_LT(lp_norm(s1.v - expected, kInfinity), 1e-12);
}

TEST(Step, RejectsOversizedStep) {
  const Grid g(16.0, 256);
  GradientSolver solver(make_config(g, 0.01, 1.0));
  const SolverState s = init(InitialDatum::zero(g), solver.config());
  EXPECT_THROW(solver.step(s, 0.02), ValidationError);
  EXPECT_THROW(solver.step(s, 0.0), ValidationError);
}

TEST(Step, CflViolationDuringRunIsRejected) {
  // Large amplitude reached only after the data steepen is still caught.
  const Grid g(16.0, 256);
  auto config = make_config(g, 0.02, 1.0);
  const auto datum = InitialDatum::from_density(0.0, sech2(g, 2.0));
  EXPECT_THROW(init(datum, config), ValidationError);
}

TEST(Step, FourthOrderSelfConvergence) {
  const Grid g(32.0, 1024);
  const auto datum = InitialDatum::from_atoms(g, -1.0, {{0.0, 2.0}});
  std::vector<Field> results;
  for (double dt : {0.02, 0.01, 0.005}) {
    GradientSolver solver(make_config(g, dt, 0.5));
    results.push_back(solver.advance_to(init(datum, solver.config()), 0.5).v);
  }
  const double e1 = lp_norm(results[0] - results[1], kInfinity);
  const double e2 = lp_norm(results[1] - results[2], kInfinity);
  EXPECT_GT(e1 / e2, 16.0 * 0.7);
  EXPECT_LT(e1 / e2, 16.0 * 1.3);
}

TEST(Background, StationaryResidualIsBounded) {
  const Grid g(32.0, 1024);
  const auto config = make_config(g, 0.01, 1.0);
  BackgroundSolver solver(config, -1.0, 1.0);
  const Field& phi = solver.background();
  const Field u1 = solver.step(phi, 0.01);
  const double bound =
      0.01 * (lp_norm(solver.background_operator(), kInfinity) +
              lp_norm(phi * solver.background_slope(), kInfinity));
  EXPECT_GT(lp_norm(u1 - phi, kInfinity), 0.0);
  EXPECT_LE(lp_norm(u1 - phi, kInfinity), bound);
  // The drift is a property of phi, not of the grid.
  const Grid fine = g.refined();
  BackgroundSolver refined(make_config(fine, 0.01, 1.0), -1.0, 1.0);
  const Field v1 = refined.step(refined.background(), 0.01);
  EXPECT_NEAR(lp_norm(v1 - refined.background(), kInfinity), lp_norm(u1 - phi, kInfinity),
              1e-3 * lp_norm(u1 - phi, kInfinity));
}

TEST(Background, ConstantDatumStaysConstant) {
  const Grid g(16.0, 256);
  const auto config = make_config(g, 0.01, 1.0);
  const Field u0 = Field::constant(g, 0.4);
  const Field u1 = BackgroundSolver(config, 0.4, 0.4).evolve(u0, 0.0, 1.0);
  EXPECT_LT(lp_norm(u1 - u0, kInfinity), 1e-12);
  EXPECT_LT(lp_norm(step_background(u0, config, 0.01, 0.4, 0.4) - u0, kInfinity), 1e-12);
}

TEST(Background, AgreesWithGradientFormulation) {
  const Grid g(400.0, 16384);
  const auto config = make_config(g, 0.01, 1.0);
  const auto datum = InitialDatum::from_density(-1.0, sech2(g));
  GradientSolver gradient(config);
  const SolverState s0 = init(datum, config);
  const Field u_grad = reconstruct_u(gradient.advance_to(s0, 1.0));
  const Field u_back = BackgroundSolver(config, -1.0, 1.0).evolve(reconstruct_u(s0), 0.0, 1.0);
  EXPECT_LT(lp_norm(u_grad - u_back, kInfinity), 1e-4);
}

TEST(Run, ZeroDatumGivesZeroTrajectory) {
  const Grid g(16.0, 256);
  auto config = make_config(g, 0.05, 2.0);
  config.sample_times = {0.5, 1.0};
  const Trajectory t = run(InitialDatum::zero(g), config);
  ASSERT_EQ(t.states.size(), 4u);
  for (const auto& s : t.states) EXPECT_EQ(lp_norm(s.v, kInfinity), 0.0);
  EXPECT_TRUE(std::isnan(t.diagnostics.back().l1_contraction));
}

TEST(Run, MassIsConservedForDeltaDatum) {
  const Grid g(400.0, 4096);
  auto config = make_config(g, 0.05, 128.0);
  for (double t = 1.0; t <= 128.0; t *= 2.0) config.sample_times.push_back(t);
  const Trajectory traj = run(InitialDatum::from_atoms(g, -1.0, {{0.0, 2.0}}), config);
  EXPECT_TRUE(traj.box_ok);
  for (const auto& d : traj.diagnostics) EXPECT_LT(std::abs(d.mass - 2.0) / 2.0, 1e-8) << d.t;
}

TEST(Run, FlagsBoxTooSmallForFan) {
  const Grid g(16.0, 256);
  EXPECT_FALSE(fan_fits_box(g, -1.0, 1.0, 8.0));
  EXPECT_TRUE(fan_fits_box(g, -1.0, 1.0, 5.0));
}

TEST(Run, InvariantsForMonotoneData) {
  const Grid g(128.0, 2048);
  auto config = make_config(g, 0.02, 20.0);
  for (double t = 0.5; t < 20.0; t *= 1.5) config.sample_times.push_back(t);
  const auto datum = InitialDatum::from_density(-1.0, sech2(g));
  const auto bumped = InitialDatum::from_density(-1.0, Field::from_function(g, [](double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c) - 0.6 * x * std::exp(-x * x) / std::sqrt(M_PI);
  }));
  const Trajectory traj = run(datum, config, bumped);
  EXPECT_NEAR(traj.diagnostics.front().l1_contraction, 0.3, 1e-6);
  for (const auto& r : solver_invariant_reports(traj)) {
    EXPECT_EQ(r.violations, 0u) << r.name << " worst " << r.worst_ratio;
    EXPECT_GT(r.count, 0u) << r.name;
  }
}

TEST(Run, ConvexFluxKeepsMonotonicityAndContraction) {
  const Grid g(128.0, 2048);
  auto config = make_config(g, 0.01, 10.0);
  config.flux = Flux::quartic();
  for (double t = 0.5; t < 10.0; t *= 1.5) config.sample_times.push_back(t);
  const auto datum = InitialDatum::from_density(-1.0, sech2(g));
  const auto bumped = InitialDatum::from_density(-1.0, Field::from_function(g, [](double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c) - 0.6 * x * std::exp(-x * x) / std::sqrt(M_PI);
  }));
  const Trajectory traj = run(datum, config, bumped);
  for (const auto& r : solver_invariant_reports(traj)) {
    if (r.name == "monotonicity" || r.name == "l1_contraction" || r.name == "mass_identity") {
      EXPECT_EQ(r.violations, 0u) << r.name << " worst " << r.worst_ratio;
    }
  }
}

TEST(Flux, ConvexityAndNames) {
  EXPECT_DOUBLE_EQ(Flux::burgers().speed(0.3), 0.3);
  EXPECT_DOUBLE_EQ(Flux::quartic().speed(1.0), 2.0);
  EXPECT_GE(Flux::quartic().convexity(), 1.0);
  EXPECT_THROW(Flux::polynomial({0.0, 0.0, -0.5}), ValidationError);
  EXPECT_THROW(Flux::from_name("cubic"), ValidationError);
  EXPECT_EQ(Flux::from_name("quartic").name(), "quartic");
}
