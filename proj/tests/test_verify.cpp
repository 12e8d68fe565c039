// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgap/problems.hpp"
#include "dgap/verify.hpp"

using dgap::GapParams;
using dgap::Matrix;
using dgap::Region;
using dgap::Vector;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

double kappa(double a, double b, double mu, double L) {
  return std::sqrt((b - a) / 2.0) * mu / (mu + b + L);
}

}  // namespace

TEST_CASE("sampling regions validate and stay in bounds") {
  CHECK_THROWS_AS(Region::ball(vec2(0, 0), 0.0), dgap::input_error);
  CHECK_THROWS_AS(Region::ball(vec2(0, 0), -1.0), dgap::input_error);
  CHECK_THROWS_AS(Region::box(vec2(1, 0), vec2(0, 1)), dgap::input_error);
  CHECK_THROWS_AS(Region::box(Vector::Zero(2), Vector::Zero(3)), dgap::input_error);

  auto ball = Region::ball(vec2(1, -1), 0.5);
  CHECK(ball.dim() == 2);
  dgap::SampleRng rng(127);
  for (int i = 0; i < 200; ++i) {
    Vector x = ball.sample(rng);
    CHECK((x - vec2(1, -1)).norm() <= 0.5 * (1.0 + 1e-12));
  }

  auto box = Region::box(vec2(-1, 2), vec2(0, 3));
  CHECK(box.dim() == 2);
  for (int i = 0; i < 200; ++i) {
    Vector x = box.sample(rng);
    CHECK(x[0] >= -1.0);
    CHECK(x[0] <= 0.0);
    CHECK(x[1] >= 2.0);
    CHECK(x[1] <= 3.0);
  }
}

TEST_CASE("KL certificate on the strongly monotone affine benchmark") {
  auto problem = dgap::builtin("affine_pd");
  GapParams params(1, 2);
  auto rep = dgap::kl_check(problem, params, vec2(1, 1), 1.0, 10.0, 2000, 42);

  CHECK(rep.kind == "KL");
  CHECK(rep.pass);
  CHECK(rep.n_samples == 2000);
  CHECK(rep.n_active == 2000);
  CHECK(rep.seed == 42);
  REQUIRE(rep.theoretical_bound.has_value());
  CHECK(*rep.theoretical_bound == doctest::Approx(kappa(1, 2, 2, 3)).epsilon(1e-14));
  // The exact infimum of the ratio on this problem is the smallest singular
  // value direction: ‖A r‖/‖r‖ ≥ 2, approached but not attained by samples.
  CHECK(rep.min_ratio >= 2.0 - 1e-9);
  CHECK(rep.min_ratio <= 2.01);
}

TEST_CASE("KL certificate on the nonsmooth benchmark") {
  auto problem = dgap::builtin("li_ng");
  GapParams params(0.5, 1);
  auto rep = dgap::kl_check(problem, params, vec2(0, 0), 1.0, 10.0, 2000, 3);
  CHECK(rep.pass);
  REQUIRE(rep.theoretical_bound.has_value());
  CHECK(*rep.theoretical_bound ==
        doctest::Approx(kappa(0.5, 1, 1, 4.04)).epsilon(1e-14));
  CHECK(rep.min_ratio >= *rep.theoretical_bound);
  CHECK(rep.n_active > 0);
}

TEST_CASE("KL ratio is exactly constant for the identity benchmark") {
  auto problem = dgap::builtin("identity_free");
  GapParams params(1, 2);
  auto rep = dgap::kl_check(problem, params, Vector::Zero(3), 2.0, 10.0, 500, 9);
  CHECK(rep.pass);
  CHECK(rep.min_ratio == 1.0);
  CHECK(*rep.theoretical_bound == doctest::Approx(kappa(1, 2, 1, 1)).epsilon(1e-14));
}

TEST_CASE("KL certificate validates its inputs") {
  auto problem = dgap::builtin("affine_pd");
  GapParams params(1, 2);
  CHECK_THROWS_AS(dgap::kl_check(problem, params, vec2(0, 0), 1.0, 10.0, 100, 1),
                  dgap::input_error);  // not a solution
  CHECK_THROWS_AS(dgap::kl_check(problem, params, vec2(1, 1), 0.0, 10.0, 100, 1),
                  dgap::input_error);
  CHECK_THROWS_AS(dgap::kl_check(problem, params, vec2(1, 1), 1.0, 0.0, 100, 1),
                  dgap::input_error);
  CHECK_THROWS_AS(dgap::kl_check(problem, params, vec2(1, 1), 1.0, 10.0, 0, 1),
                  dgap::input_error);
  // A center within the natural-residual tolerance is accepted.
  auto rep = dgap::kl_check(problem, params, vec2(1.0 + 1e-10, 1.0), 1.0, 10.0, 50, 1);
  CHECK(rep.n_samples == 50);
}

TEST_CASE("KL level filter can empty the active set") {
  auto problem = dgap::builtin("affine_pd");
  GapParams params(1, 2);
  auto rep = dgap::kl_check(problem, params, vec2(1, 1), 1.0, 1e-13, 200, 11);
  CHECK(rep.n_active == 0);
  CHECK_FALSE(rep.pass);
  CHECK(std::isnan(rep.min_ratio));
}

TEST_CASE("KL certificate without declared moduli uses the positivity margin") {
  Matrix A(1, 1);
  A << 1;
  Vector q(1), sol(1);
  q << -1;
  sol << 1;
  auto problem = dgap::make_affine("scalar", dgap::ConvexSet::free(1), A, q, 1.0);
  problem.with_solutions(dgap::SolutionSet::from_points({sol}));
  auto rep = dgap::kl_check(problem, GapParams(1, 2), sol, 1.0, 10.0, 500, 13);
  CHECK_FALSE(rep.theoretical_bound.has_value());
  CHECK(rep.pass);
  CHECK(rep.min_ratio > 1e-8);
}

TEST_CASE("verification runs are deterministic in the seed") {
  auto problem = dgap::builtin("li_ng");
  GapParams params(0.5, 1);
  auto r1 = dgap::kl_check(problem, params, vec2(0, 0), 1.0, 10.0, 1000, 77);
  auto r2 = dgap::kl_check(problem, params, vec2(0, 0), 1.0, 10.0, 1000, 77);
  CHECK(r1.min_ratio == r2.min_ratio);
  CHECK(r1.n_active == r2.n_active);
  CHECK(r1.pass == r2.pass);
}

TEST_CASE("error-bound certificate on both declared benchmarks") {
  auto affine = dgap::builtin("affine_pd");
  auto rep = dgap::error_bound_check(affine, GapParams(1, 2),
                                     Region::ball(vec2(1, 1), 2.0), 100.0, 2000, 5);
  CHECK(rep.kind == "ErrorBound");
  CHECK(rep.pass);
  CHECK(*rep.theoretical_bound == doctest::Approx(kappa(1, 2, 2, 3)).epsilon(1e-14));
  // sqrt(f_ab)/d(x,S) = ‖A r‖/(2‖r‖) ∈ [1, 1.5] on this problem.
  CHECK(rep.min_ratio >= 1.0 - 1e-9);
  CHECK(rep.min_ratio <= 1.51);

  auto li_ng = dgap::builtin("li_ng");
  auto rep2 = dgap::error_bound_check(li_ng, GapParams(0.5, 1),
                                      Region::ball(vec2(0, 0), 1.0), 100.0, 2000, 5);
  CHECK(rep2.pass);
  CHECK(rep2.min_ratio >= *rep2.theoretical_bound - 1e-12);
}

TEST_CASE("error-bound spot values at the affine anchor point") {
  auto problem = dgap::builtin("affine_pd");
  auto eval = dgap::d_gap(problem, GapParams(1, 2), vec2(0, 0));
  double lhs = std::sqrt(eval.fab);
  double rhs = kappa(1, 2, 2, 3) * dgap::distance_to_solutions(problem, vec2(0, 0));
  CHECK(lhs == doctest::Approx(1.8027756377319946).epsilon(1e-14));
  CHECK(rhs == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
  CHECK(lhs >= rhs);
}

TEST_CASE("error-bound certificate requires declared problem data") {
  auto bare = dgap::make_affine("bare", dgap::ConvexSet::free(2),
                                Matrix::Identity(2, 2), vec2(-1, -1), 1.0);
  CHECK_THROWS_AS(
      dgap::error_bound_check(bare, GapParams(1, 2), Region::ball(vec2(0, 0), 1.0),
                              1.0, 100, 1),
      dgap::capability_error);

  auto no_mu = dgap::builtin("constant_orthant");
  CHECK_THROWS_AS(
      dgap::error_bound_check(no_mu, GapParams(1, 2), Region::ball(vec2(0, 0), 1.0),
                              1.0, 100, 1),
      dgap::capability_error);

  auto affine = dgap::builtin("affine_pd");
  CHECK_THROWS_AS(
      dgap::error_bound_check(affine, GapParams(1, 2), Region::ball(vec2(0, 0), 1.0),
                              0.0, 100, 1),
      dgap::input_error);
  CHECK_THROWS_AS(
      dgap::error_bound_check(affine, GapParams(1, 2),
                              Region::ball(Vector::Zero(3), 1.0), 1.0, 100, 1),
      dgap::input_error);
}

TEST_CASE("error-bound level filter can empty the active set") {
  auto problem = dgap::builtin("affine_pd");
  auto rep = dgap::error_bound_check(problem, GapParams(1, 2),
                                     Region::ball(vec2(0, 0), 0.5), 1e-13, 200, 19);
  CHECK(rep.n_active == 0);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("equivalence sweep sees commensurate moduli on a clean benchmark") {
  auto problem = dgap::builtin("li_ng");
  auto sweep = dgap::equivalence_sweep(problem, GapParams(0.5, 1),
                                       Region::ball(vec2(0, 0), 1.5), 2000, 23);
  CHECK(sweep.n_samples == 2000);
  CHECK(sweep.n_active_sqrt_gap > 0);
  CHECK(sweep.n_active_residual > 0);
  CHECK(sweep.n_active_proj_diff > 0);
  CHECK(sweep.inf_vs_sqrt_gap >= 0.08);
  CHECK(sweep.inf_vs_residual >= 0.05);
  CHECK(sweep.inf_vs_proj_diff >= 0.9);
}

TEST_CASE("equivalence sweep exposes joint degeneracy") {
  // F constant and nonzero on free space: every point has fab = ‖q‖²/4 > 0
  // with a zero subgradient, so all three ratios vanish identically.
  auto flat = dgap::make_affine("flat", dgap::ConvexSet::free(2),
                                Matrix::Zero(2, 2), vec2(1, 1), 0.0);
  auto sweep = dgap::equivalence_sweep(flat, GapParams(1, 2),
                                       Region::ball(vec2(0, 0), 2.0), 500, 29);
  CHECK(sweep.n_active_sqrt_gap == 500);
  CHECK(sweep.n_active_residual == 500);
  CHECK(sweep.n_active_proj_diff == 500);
  CHECK(sweep.inf_vs_sqrt_gap == 0.0);
  CHECK(sweep.inf_vs_residual == 0.0);
  CHECK(sweep.inf_vs_proj_diff == 0.0);
}

TEST_CASE("pre-sweep level selection is deterministic and scaled to the region") {
  auto problem = dgap::builtin("affine_pd");
  GapParams params(1, 2);
  auto region = Region::ball(vec2(1, 1), 1.0);
  double level1 = dgap::presweep_level(problem, params, region, 42);
  double level2 = dgap::presweep_level(problem, params, region, 42);
  CHECK(level1 == level2);
  CHECK(level1 > 0.0);
  // sup f_ab over the unit ball around the solution is ‖A‖²/4 = 2.25, and
  // the level is twice an observed value below that.
  CHECK(level1 <= 4.5 + 1e-9);
  CHECK(level1 >= 1.0);

  // Levels chosen this way keep nearly all samples active in the KL check.
  auto rep = dgap::kl_check(problem, params, vec2(1, 1), 1.0, level1, 2000, 42);
  CHECK(rep.n_active >= 1990);
  CHECK(rep.pass);
}
