#include <cmath>

#include <benchmark/benchmark.h>

#include "fracburgers/solver.hpp"
#include "fracburgers/spectral.hpp"
#include "fracburgers/stable_kernel.hpp"

using namespace fracburgers;

namespace {

Field gaussian(const Grid& g) {
  return Field::from_function(g, [](double x) { return std::exp(-x * x); });
}

void BM_ApplySymbol(benchmark::State& state) {
  const Grid g(32.0, static_cast<std::size_t>(state.range(0)));
  const Field f = gaussian(g);
  const LevySymbol s = LevySymbol::fractional(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_symbol(f, s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplySymbol)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_FractionalIntegral(benchmark::State& state) {
  const Grid g(32.0, static_cast<std::size_t>(state.range(0)));
  const Field f = gaussian(g);
  const double c = calibrate_c_alpha(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_fractional_laplacian_integral(f, 1.5, c));
}
BENCHMARK(BM_FractionalIntegral)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_SolverStep(benchmark::State& state) {
  const Grid g(400.0, static_cast<std::size_t>(state.range(0)));
  SolverConfig config{g, LevySymbol::fractional(1.5)};
  config.dt = 0.25 * g.dx();
  const auto datum = InitialDatum::from_density(-1.0, Field::from_function(g, [](double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c);
  }));
  GradientSolver solver(config);
  SolverState s = init(datum, config);
  for (auto _ : state) {
    s = solver.step(s);
    benchmark::DoNotOptimize(s.v[0]);
  }
}
BENCHMARK(BM_SolverStep)->RangeMultiplier(2)->Range(1 << 12, 1 << 14);

void BM_ProfileEval(benchmark::State& state) {
  const StableKernel kernel(1.5);
  const double y = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel.profile(y));
}
BENCHMARK(BM_ProfileEval)->Arg(0)->Arg(5)->Arg(50)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
