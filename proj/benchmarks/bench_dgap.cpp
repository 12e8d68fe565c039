// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "dgap/dgap.hpp"

namespace {

using dgap::Vector;

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

void BM_ProjectBox(benchmark::State& state) {
  auto set = dgap::ConvexSet::box(Vector::Constant(8, -1.0), Vector::Constant(8, 1.0));
  dgap::SampleRng rng(1);
  Vector y = rng.uniform_box(Vector::Constant(8, -3.0), Vector::Constant(8, 3.0));
  for (auto _ : state) benchmark::DoNotOptimize(set.project(y));
}
BENCHMARK(BM_ProjectBox);

void BM_ProjectBall(benchmark::State& state) {
  auto set = dgap::ConvexSet::ball(Vector::Zero(8), 1.0);
  dgap::SampleRng rng(2);
  Vector y = rng.uniform_box(Vector::Constant(8, -3.0), Vector::Constant(8, 3.0));
  for (auto _ : state) benchmark::DoNotOptimize(set.project(y));
}
BENCHMARK(BM_ProjectBall);

void BM_DGapAffine(benchmark::State& state) {
  auto prob = dgap::builtin("affine_pd");
  const dgap::GapParams params{1.0, 2.0};
  const Vector x = vec2(-0.7, 2.3);
  for (auto _ : state) benchmark::DoNotOptimize(dgap::d_gap(prob, params, x).fab);
}
BENCHMARK(BM_DGapAffine);

void BM_DGapLiNg(benchmark::State& state) {
  auto prob = dgap::builtin("li_ng");
  const dgap::GapParams params{0.5, 1.0};
  const Vector x = vec2(1.2, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(dgap::d_gap(prob, params, x).fab);
}
BENCHMARK(BM_DGapLiNg);

void BM_ClarkeGeneratorsAtKink(benchmark::State& state) {
  auto prob = dgap::builtin("li_ng");
  const dgap::GapParams params{0.5, 1.0};
  const Vector x = vec2(0.0, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(dgap::clarke_generators(prob, params, x).hull_dist_zero);
}
BENCHMARK(BM_ClarkeGeneratorsAtKink);

void BM_MinNormInHull(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  dgap::SampleRng rng(7);
  std::vector<Vector> gens;
  for (int i = 0; i < k; ++i) {
    Vector g(4);
    for (int j = 0; j < 4; ++j) g[j] = rng.uniform(-1.0, 1.0);
    gens.push_back(g + Vector::Constant(4, 0.3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(dgap::min_norm_in_hull(gens).dist);
}
BENCHMARK(BM_MinNormInHull)->Arg(2)->Arg(3)->Arg(8);

void BM_SolveAffine(benchmark::State& state) {
  auto prob = dgap::builtin("affine_pd");
  dgap::SolverConfig cfg{dgap::GapParams(1.0, 2.0)};
  cfg.alpha = 0.75;
  cfg.beta = 0.1;
  cfg.tau = 0.5;
  const Vector x0 = vec2(0, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(dgap::solve(prob, cfg, x0).final_fab);
}
BENCHMARK(BM_SolveAffine);

void BM_SolveLiNg(benchmark::State& state) {
  auto prob = dgap::builtin("li_ng");
  dgap::SolverConfig cfg{dgap::GapParams(0.5, 1.0)};
  cfg.alpha = 0.375;
  cfg.beta = 0.5 * 0.5 / 5.04;
  cfg.tau = 0.5;
  const Vector x0 = vec2(-1, -1);
  for (auto _ : state)
    benchmark::DoNotOptimize(dgap::solve(prob, cfg, x0).final_fab);
}
BENCHMARK(BM_SolveLiNg);

void BM_KlCheck(benchmark::State& state) {
  auto prob = dgap::builtin("affine_pd");
  const dgap::GapParams params{1.0, 2.0};
  const Vector center = vec2(1, 1);
  const long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dgap::kl_check(prob, params, center, 1.0, 10.0, n, 42).min_ratio);
}
BENCHMARK(BM_KlCheck)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
