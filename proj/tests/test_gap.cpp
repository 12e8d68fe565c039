// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgap/gap.hpp"
#include "dgap/problems.hpp"
#include "dgap/sampling.hpp"
#include "oracles.hpp"

using dgap::GapParams;
using dgap::Vector;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("gap parameter validation") {
  CHECK_THROWS_AS(GapParams(2.0, 1.0), dgap::input_error);
  CHECK_THROWS_AS(GapParams(1.0, 1.0), dgap::input_error);
  CHECK_THROWS_AS(GapParams(0.0, 1.0), dgap::input_error);
  CHECK_THROWS_AS(GapParams(-1.0, 1.0), dgap::input_error);
  CHECK_THROWS_AS(GapParams(std::nan(""), 1.0), dgap::input_error);
  GapParams ok(0.5, 1.0);
  CHECK(ok.a == 0.5);
  CHECK(ok.b == 1.0);
}

TEST_CASE("regularized gap closed form on the affine benchmark") {
  auto problem = dgap::builtin("affine_pd");
  Vector x = vec2(0, 0);

  CHECK(dgap::pi(problem, 1.0, x) == vec2(2, 3));
  CHECK(dgap::pi(problem, 2.0, x) == vec2(1, 1.5));

  auto g1 = dgap::regularized_gap(problem, 1.0, x);
  CHECK(g1.value == doctest::Approx(6.5).epsilon(1e-14));
  CHECK(g1.pi_c == vec2(2, 3));

  auto g2 = dgap::regularized_gap(problem, 2.0, x);
  CHECK(g2.value == doctest::Approx(3.25).epsilon(1e-14));

  CHECK_THROWS_AS(dgap::pi(problem, 0.0, x), dgap::input_error);
  CHECK_THROWS_AS(dgap::pi(problem, -1.0, x), dgap::input_error);
}

TEST_CASE("d-gap evaluation on the affine benchmark anchor point") {
  auto problem = dgap::builtin("affine_pd");
  auto eval = dgap::d_gap(problem, GapParams(1, 2), vec2(0, 0));

  CHECK(eval.fab == doctest::Approx(3.25).epsilon(1e-14));
  CHECK(eval.f_a_val == doctest::Approx(6.5).epsilon(1e-14));
  CHECK(eval.f_b_val == doctest::Approx(3.25).epsilon(1e-14));
  CHECK(eval.pi_a == vec2(2, 3));
  CHECK(eval.pi_b == vec2(1, 1.5));
  CHECK(eval.u == vec2(-2, -3));
  CHECK(eval.w == vec2(1, 1.5));
  CHECK(eval.fx == vec2(-2, -3));
  CHECK(eval.x == vec2(0, 0));
}

TEST_CASE("d-gap equals the difference of regularized gaps") {
  dgap::SampleRng rng(23);
  for (const auto& id : dgap::builtin_ids()) {
    auto problem = dgap::builtin(id);
    GapParams params = problem.default_params().value_or(GapParams(1, 2));
    for (int trial = 0; trial < 100; ++trial) {
      Vector x = rng.uniform_box(Vector::Constant(problem.dim(), -2.0),
                                 Vector::Constant(problem.dim(), 2.0));
      auto eval = dgap::d_gap(problem, params, x);
      double direct = dgap::regularized_gap(problem, params.a, x).value -
                      dgap::regularized_gap(problem, params.b, x).value;
      CHECK(std::abs(eval.fab - direct) <= 1e-9 * (1.0 + std::abs(eval.fab)));
      CHECK(eval.f_a_val - eval.f_b_val ==
            doctest::Approx(direct).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("identity map on free space has a closed-form d-gap") {
  auto problem = dgap::builtin("identity_free");
  dgap::SampleRng rng(31);
  const std::vector<GapParams> grids = {GapParams(1, 2), GapParams(0.5, 1),
                                        GapParams(0.25, 4)};
  for (const auto& params : grids) {
    for (int trial = 0; trial < 50; ++trial) {
      Vector x = rng.uniform_box(Vector::Constant(3, -5.0), Vector::Constant(3, 5.0));
      double expected =
          (params.b - params.a) / (2.0 * params.a * params.b) * x.squaredNorm();
      double got = dgap::d_gap(problem, params, x).fab;
      CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("nonsmooth benchmark point where the sandwich collapses") {
  auto problem = dgap::builtin("li_ng");
  GapParams params(0.5, 1.0);
  auto eval = dgap::d_gap(problem, params, vec2(-1, -1));

  CHECK(eval.pi_a == vec2(1, 1));
  CHECK(eval.pi_b == vec2(0, 0));
  CHECK(eval.u == vec2(-2, -2));
  CHECK(eval.w == vec2(1, 1));
  CHECK(eval.fab == doctest::Approx(1.0).epsilon(1e-14));

  double lower = 0.5 * (params.b - params.a) * (eval.x - eval.pi_b).squaredNorm() +
                 0.5 * params.a * eval.w.squaredNorm();
  double upper = 0.5 * (params.b - params.a) * eval.u.squaredNorm() -
                 0.5 * params.b * eval.w.squaredNorm();
  CHECK(std::abs(lower - 1.0) <= 1e-12);
  CHECK(std::abs(upper - 1.0) <= 1e-12);
}

TEST_CASE("elementary d-gap inequalities hold at sampled points") {
  dgap::SampleRng rng(37);
  for (const auto& id : dgap::builtin_ids()) {
    auto problem = dgap::builtin(id);
    GapParams params = problem.default_params().value_or(GapParams(1, 2));
    int passes = 0;
    for (int trial = 0; trial < 250; ++trial) {
      Vector x = rng.uniform_box(Vector::Constant(problem.dim(), -2.0),
                                 Vector::Constant(problem.dim(), 2.0));
      auto report = dgap::basic_property_report(problem, params, x);
      CHECK_MESSAGE(report.all(), id, " trial ", trial);
      CHECK_FALSE(report.e_skipped);
      passes += report.all();
    }
    CHECK(passes == 250);
  }
}

TEST_CASE("inequality report skips tangent-cone clauses on a ball set") {
  dgap::Matrix A = dgap::Matrix::Identity(2, 2);
  auto problem = dgap::make_affine("ball_affine", dgap::ConvexSet::ball(vec2(0, 0), 1.0),
                                   A, vec2(-1, -0.5), 1.0);
  auto report = dgap::basic_property_report(problem, GapParams(1, 2), vec2(0.3, 0.9));
  CHECK(report.e_skipped);
  CHECK(report.sandwich);
  CHECK(report.residual_ratios);
  CHECK(report.inner_product_d);
  CHECK(report.all());
}

TEST_CASE("d-gap vanishes exactly at solutions and is positive elsewhere") {
  dgap::SampleRng rng(41);
  for (const auto& id : dgap::builtin_ids()) {
    auto problem = dgap::builtin(id);
    GapParams params = problem.default_params().value_or(GapParams(1, 2));

    for (int trial = 0; trial < 100; ++trial) {
      Vector x = rng.uniform_box(Vector::Constant(problem.dim(), -2.0),
                                 Vector::Constant(problem.dim(), 2.0));
      auto eval = dgap::d_gap(problem, params, x);
      CHECK(eval.fab >= 0.0);
      if (!dgap::is_solution(problem, x, 1e-8)) CHECK(eval.fab > 0.0);
    }
  }
}

TEST_CASE("solution test is independent of the probe modulus") {
  for (const auto& id : {"affine_pd", "li_ng", "identity_free"}) {
    auto problem = dgap::builtin(id);
    Vector sol = problem.dim() == 3 ? Vector(Vector::Zero(3))
                 : std::string(id) == "affine_pd" ? vec2(1, 1)
                                                  : vec2(0, 0);
    CHECK(dgap::is_solution(problem, sol));
    for (double c : {0.5, 1.0, 2.0, 8.0}) {
      CHECK((dgap::pi(problem, c, sol) - sol).norm() <= 1e-12);
    }
    CHECK(dgap::d_gap(problem, GapParams(1, 2), sol).fab <= 1e-15);
  }
}

TEST_CASE("d-gap change between points obeys the local slope bound") {
  // |f_ab(y) - f_ab(x)| is controlled by the largest generator norm bound
  //   B(z) = (b+L)‖w(z)‖ + (b-a)‖u(z)‖
  // along the segment between them.
  dgap::SampleRng rng(43);
  for (const auto& id : {"affine_pd", "li_ng"}) {
    auto problem = dgap::builtin(id);
    GapParams params = problem.default_params().value_or(GapParams(1, 2));
    const double L = problem.lipschitz_L();
    for (int trial = 0; trial < 40; ++trial) {
      Vector x = rng.uniform_box(vec2(-2, -2), vec2(2, 2));
      Vector y = rng.uniform_box(vec2(-2, -2), vec2(2, 2));
      double slope_bound = 0.0;
      for (int k = 0; k <= 80; ++k) {
        Vector z = x + (y - x) * (static_cast<double>(k) / 80.0);
        auto ez = dgap::d_gap(problem, params, z);
        double B = (params.b + L) * ez.w.norm() + (params.b - params.a) * ez.u.norm();
        slope_bound = std::max(slope_bound, B);
      }
      double lhs = std::abs(dgap::d_gap(problem, params, y).fab -
                            dgap::d_gap(problem, params, x).fab);
      CHECK(lhs <= 1.1 * slope_bound * (y - x).norm() + 1e-9);
    }
  }
}

TEST_CASE("brute-force gap maximization brackets the closed form") {
  auto affine = dgap::builtin("affine_pd");
  double exact = dgap::regularized_gap(affine, 1.0, vec2(0, 0)).value;
  double brute = dgap::brute_force_gap(affine, 1.0, vec2(0, 0), 1.0, 101);
  CHECK(brute <= exact + 1e-9);
  CHECK(exact - brute <= 2e-4);

  auto li_ng = dgap::builtin("li_ng");
  double exact2 = dgap::regularized_gap(li_ng, 1.0, vec2(-1, -1)).value;
  CHECK(exact2 == doctest::Approx(1.0).epsilon(1e-14));
  double brute2 = dgap::brute_force_gap(li_ng, 1.0, vec2(-1, -1), 1.0, 81);
  CHECK(brute2 <= exact2 + 1e-9);
  CHECK(exact2 - brute2 <= 1e-3);
}

TEST_CASE("brute-force maximizer guards its grid") {
  auto problem = dgap::builtin("identity_free");
  CHECK_THROWS_AS(dgap::brute_force_gap(problem, 1.0, Vector::Zero(3), 1.0, 2),
                  dgap::input_error);
  CHECK_THROWS_AS(dgap::brute_force_gap(problem, 1.0, Vector::Zero(3), 1.0, 500),
                  dgap::input_error);
}

TEST_CASE("gap evaluation rejects dimension mismatches") {
  auto problem = dgap::builtin("affine_pd");
  CHECK_THROWS_AS(dgap::d_gap(problem, GapParams(1, 2), Vector::Zero(3)),
                  dgap::input_error);
  CHECK_THROWS_AS(dgap::regularized_gap(problem, 1.0, Vector::Zero(1)),
                  dgap::input_error);
}
