// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dgap {

namespace {

constexpr double kGapFloor = 1e-14;    // f_ab at or below this counts as solved
constexpr double kDenomFloor = 1e-12;  // smallest usable ratio denominator
constexpr double kBoundSlack = 1e-12;
constexpr double kNoBoundMargin = 1e-8;
constexpr std::uint64_t kPresweepSalt = 0x9e3779b97f4a7c15ULL;

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

void check_samples(long n_samples) {
  if (n_samples < 1) throw input_error("verify: n_samples must be >= 1");
}

std::optional<double> kappa_bound(const VIProblem& problem, const GapParams& params) {
  if (!problem.mu_star()) return std::nullopt;
  double mu = *problem.mu_star();
  return std::sqrt((params.b - params.a) / 2.0) * mu /
         (mu + params.b + problem.lipschitz_L());
}

}  // namespace

Region Region::ball(Vector center, double radius) {
  if (!(radius > 0)) throw input_error("Region::ball: radius must be positive");
  Region r{Shape::Ball, std::move(center), radius, Vector(), Vector()};
  return r;
}

Region Region::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size() || lo.size() < 1)
    throw input_error("Region::box: lo and hi must have equal positive length");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i]))
      throw input_error("Region::box: requires lo[i] <= hi[i]");
  Region r{Shape::Box, Vector(), 0, std::move(lo), std::move(hi)};
  return r;
}

Eigen::Index Region::dim() const {
  return shape == Shape::Ball ? center.size() : lo.size();
}

Vector Region::sample(SampleRng& rng) const {
  return shape == Shape::Ball ? rng.in_ball(center, radius)
                              : rng.uniform_box(lo, hi);
}

VerificationReport kl_check(const VIProblem& problem, const GapParams& params,
                            const Vector& xbar, double radius, double nu,
                            long n_samples, std::uint64_t seed) {
  check_samples(n_samples);
  if (!(radius > 0)) throw input_error("kl_check: radius must be positive");
  if (!(nu > 0)) throw input_error("kl_check: nu must be positive");
  if (!is_solution(problem, xbar, 1e-8))
    throw input_error("kl_check: xbar does not pass is_solution");

  VerificationReport rep;
  rep.kind = "KL";
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.region = Region::ball(xbar, radius);
  rep.min_ratio = nan_value();
  rep.theoretical_bound = kappa_bound(problem, params);

  SampleRng rng(seed);
  for (long i = 0; i < n_samples; ++i) {
    Vector x = rep.region.sample(rng);
    DGapEval e = d_gap(problem, params, x);
    if (!(e.fab > kGapFloor) || !(e.fab < nu)) continue;
    double dist = clarke_generators(problem, params, x).hull_dist_zero;
    double ratio = dist / std::sqrt(e.fab);
    if (rep.n_active == 0 || ratio < rep.min_ratio) rep.min_ratio = ratio;
    ++rep.n_active;
  }

  if (rep.n_active == 0)
    rep.pass = false;
  else if (rep.theoretical_bound)
    rep.pass = rep.min_ratio >= *rep.theoretical_bound - kBoundSlack;
  else
    rep.pass = rep.min_ratio > kNoBoundMargin;
  return rep;
}

VerificationReport error_bound_check(const VIProblem& problem,
                                     const GapParams& params, const Region& region,
                                     double epsilon, long n_samples,
                                     std::uint64_t seed) {
  check_samples(n_samples);
  if (!(epsilon > 0)) throw input_error("error_bound_check: epsilon must be positive");
  if (region.dim() != problem.dim())
    throw input_error("error_bound_check: region dimension mismatch");
  if (!problem.solutions())
    throw capability_error("error_bound_check: problem has no recorded solution set");
  if (!problem.mu_star())
    throw capability_error("error_bound_check: problem declares no mu_star");

  VerificationReport rep;
  rep.kind = "ErrorBound";
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.region = region;
  rep.min_ratio = nan_value();
  rep.theoretical_bound = kappa_bound(problem, params);

  SampleRng rng(seed);
  for (long i = 0; i < n_samples; ++i) {
    Vector x = region.sample(rng);
    DGapEval e = d_gap(problem, params, x);
    if (!(e.fab > kGapFloor) || !(e.fab <= epsilon)) continue;
    double dist = problem.solutions()->distance(x);
    if (dist <= kDenomFloor) continue;
    double ratio = std::sqrt(e.fab) / dist;
    if (rep.n_active == 0 || ratio < rep.min_ratio) rep.min_ratio = ratio;
    ++rep.n_active;
  }

  rep.pass = rep.n_active > 0 && rep.min_ratio >= *rep.theoretical_bound - kBoundSlack;
  return rep;
}

EquivalenceSweep equivalence_sweep(const VIProblem& problem, const GapParams& params,
                                   const Region& region, long n_samples,
                                   std::uint64_t seed) {
  check_samples(n_samples);
  if (region.dim() != problem.dim())
    throw input_error("equivalence_sweep: region dimension mismatch");

  EquivalenceSweep sweep;
  sweep.n_samples = n_samples;
  sweep.seed = seed;
  sweep.inf_vs_sqrt_gap = nan_value();
  sweep.inf_vs_residual = nan_value();
  sweep.inf_vs_proj_diff = nan_value();

  SampleRng rng(seed);
  for (long i = 0; i < n_samples; ++i) {
    Vector x = region.sample(rng);
    DGapEval e = d_gap(problem, params, x);
    double dist = clarke_generators(problem, params, x).hull_dist_zero;
    if (e.fab > kGapFloor) {
      double r = dist / std::sqrt(e.fab);
      if (sweep.n_active_sqrt_gap == 0 || r < sweep.inf_vs_sqrt_gap)
        sweep.inf_vs_sqrt_gap = r;
      ++sweep.n_active_sqrt_gap;
    }
    double nu_norm = e.u.norm();
    if (nu_norm > kDenomFloor) {
      double r = dist / nu_norm;
      if (sweep.n_active_residual == 0 || r < sweep.inf_vs_residual)
        sweep.inf_vs_residual = r;
      ++sweep.n_active_residual;
    }
    double nw_norm = e.w.norm();
    if (nw_norm > kDenomFloor) {
      double r = dist / nw_norm;
      if (sweep.n_active_proj_diff == 0 || r < sweep.inf_vs_proj_diff)
        sweep.inf_vs_proj_diff = r;
      ++sweep.n_active_proj_diff;
    }
  }
  return sweep;
}

double presweep_level(const VIProblem& problem, const GapParams& params,
                      const Region& region, std::uint64_t seed) {
  SampleRng rng(seed ^ kPresweepSalt);
  double worst = 0.0;
  for (int i = 0; i < 256; ++i)
    worst = std::max(worst, d_gap(problem, params, region.sample(rng)).fab);
  return 2.0 * worst + 1e-12;
}

}  // namespace dgap
