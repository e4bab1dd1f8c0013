#include <benchmark/benchmark.h>

#include "bht/cpn_geometry.hpp"
#include "bht/solvers.hpp"
#include "bht/sphere_geometry.hpp"
#include "bht/verifier.hpp"

using namespace bht;

static void BM_QuadSolve(benchmark::State& state) {
  QuadSurd c2(1), c1(-69), c0(1176);
  for (auto _ : state) benchmark::DoNotOptimize(quad_solve(c2, c1, c0));
}
BENCHMARK(BM_QuadSolve);

static void BM_SurdEval(benchmark::State& state) {
  QuadSurd x = QuadSurd::normalized(Rational(11, 28), Rational(-1, 28), 65);
  for (auto _ : state) benchmark::DoNotOptimize(x.eval(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SurdEval)->Arg(12)->Arg(50);

static void BM_SolveLagrangian(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FamilyParams params{Family::CpnLagrangianTorus, n, 1, n};
  for (auto _ : state) benchmark::DoNotOptimize(solve_lagrangian_radii(params));
}
BENCHMARK(BM_SolveLagrangian)->Arg(4)->Arg(8)->Arg(12);

static void BM_MeanCurvatureField(benchmark::State& state) {
  auto sol = solve_lagrangian_radii({Family::CpnLagrangianTorus, 4, 1, 4}).solutions[1];
  Chart chart = flat_torus_chart(instance_of(sol).radii());
  EmbeddedChart embedded = embed_in_sphere(chart);
  VecR theta = VecR::Constant(chart.dim, 0.8L);
  FdConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(mean_curvature_at(embedded, theta, cfg));
}
BENCHMARK(BM_MeanCurvatureField);

static void BM_BitensionSphere(benchmark::State& state) {
  Chart chart = flat_torus_chart({std::sqrt(0.5L), 0.5L, 0.5L});
  VecR theta = VecR::Constant(chart.dim, 0.9L);
  FdConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(bitension_sphere(chart, theta, cfg));
}
BENCHMARK(BM_BitensionSphere);

static void BM_BitensionCpn(benchmark::State& state) {
  auto sol = solve_lagrangian_radii({Family::CpnLagrangianTorus, 2, 1, 2}).solutions[1];
  CpnChart chart = quotient_chart(flat_torus_chart(instance_of(sol).radii()));
  VecR sigma = VecR::Constant(chart.dim, 0.9L);
  FdConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(bitension_cpn(chart, sigma, cfg));
}
BENCHMARK(BM_BitensionCpn);

BENCHMARK_MAIN();
