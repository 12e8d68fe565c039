// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/gap.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace dgap {

namespace {

// lhs ≤ rhs up to tol·max(1, |lhs|, |rhs|).
bool approx_le(double lhs, double rhs, double tol) {
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs <= rhs + tol * scale;
}

void check_modulus(double c, const char* where) {
  if (!(c > 0) || !std::isfinite(c))
    throw input_error(std::string(where) + ": modulus c must be positive and finite");
}

}  // namespace

Vector pi(const VIProblem& problem, double c, const Vector& x) {
  check_modulus(c, "pi");
  return problem.set().project(x - problem.map(x) / c);
}

RegularizedGap regularized_gap(const VIProblem& problem, double c, const Vector& x) {
  check_modulus(c, "regularized_gap");
  Vector fx = problem.map(x);
  Vector pi_c = problem.set().project(x - fx / c);
  Vector r = x - pi_c;
  return {fx.dot(r) - 0.5 * c * r.squaredNorm(), std::move(pi_c)};
}

DGapEval d_gap(const VIProblem& problem, const GapParams& params, const Vector& x) {
  DGapEval e;
  e.x = x;
  e.fx = problem.map(x);
  e.pi_a = problem.set().project(x - e.fx / params.a);
  e.pi_b = problem.set().project(x - e.fx / params.b);
  e.u = x - e.pi_a;
  e.w = e.pi_a - e.pi_b;
  Vector rb = x - e.pi_b;
  e.f_a_val = e.fx.dot(e.u) - 0.5 * params.a * e.u.squaredNorm();
  e.f_b_val = e.fx.dot(rb) - 0.5 * params.b * rb.squaredNorm();
  e.fab = e.fx.dot(e.pi_b - e.pi_a) - 0.5 * params.a * e.u.squaredNorm() +
          0.5 * params.b * rb.squaredNorm();
  // f_ab ≥ 0 always holds in exact arithmetic; absorb roundoff-scale negatives.
  double scale = std::abs(e.f_a_val) + std::abs(e.f_b_val) + 1.0;
  if (e.fab < 0 && e.fab > -1e-13 * scale) e.fab = 0.0;
  return e;
}

BasicPropertyReport basic_property_report(const VIProblem& problem,
                                          const GapParams& params,
                                          const Vector& x, double tol) {
  if (!(tol >= 0)) throw input_error("basic_property_report: tol must be >= 0");
  DGapEval e = d_gap(problem, params, x);
  const double a = params.a, b = params.b;
  double nu2 = e.u.squaredNorm();
  double nw2 = e.w.squaredNorm();
  double nrb2 = (e.x - e.pi_b).squaredNorm();

  BasicPropertyReport rep;
  double lower = 0.5 * (b - a) * nrb2 + 0.5 * a * nw2;
  double upper = 0.5 * (b - a) * nu2 - 0.5 * b * nw2;
  rep.sandwich = approx_le(lower, e.fab, tol) && approx_le(e.fab, upper, tol);

  double nu = std::sqrt(nu2), nw = std::sqrt(nw2), nrb = std::sqrt(nrb2);
  rep.residual_ratios = approx_le(nw, (b - a) / a * nu, tol) &&
                        approx_le(nrb, nu, tol) &&
                        approx_le(nu, b / a * nrb, tol);

  rep.inner_product_d = approx_le(0.0, (a * e.u - b * (e.x - e.pi_b)).dot(e.w), tol);

  if (problem.set().polyhedral()) {
    // Lemma (e): π_a - π_b lies in T_K(π_b), in -T_K(π_a), and in the polar
    // of F(x).
    double cone_tol = std::max(tol, 1e-10);
    rep.cone_membership_e =
        problem.set().tangent_cone_contains(e.pi_b, e.w, cone_tol) &&
        problem.set().tangent_cone_contains(e.pi_a, -e.w, cone_tol) &&
        approx_le(e.fx.dot(e.w), 0.0, tol);
  } else {
    rep.e_skipped = true;
  }
  return rep;
}

bool is_solution(const VIProblem& problem, const Vector& x, double tol) {
  if (!(tol >= 0)) throw input_error("is_solution: tol must be >= 0");
  return (x - pi(problem, 1.0, x)).norm() <= tol;
}

double brute_force_gap(const VIProblem& problem, double c, const Vector& x,
                       double grid_radius, int grid_n) {
  check_modulus(c, "brute_force_gap");
  if (!(grid_radius > 0))
    throw input_error("brute_force_gap: grid_radius must be positive");
  if (grid_n < 3) throw input_error("brute_force_gap: grid_n must be >= 3");
  const Eigen::Index n = problem.dim();
  double total = std::pow(static_cast<double>(grid_n), static_cast<double>(n));
  if (total > 5e7)
    throw input_error("brute_force_gap: grid_n^dim exceeds the 5e7 point guard");

  Vector fx = problem.map(x);
  Vector center = problem.set().project(x - fx / c);
  auto objective = [&](const Vector& y) {
    Vector d = x - y;
    return fx.dot(d) - 0.5 * c * d.squaredNorm();
  };

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> idx(static_cast<size_t>(n), 0);
  Vector y(n);
  const double h = 2.0 * grid_radius / (grid_n - 1);
  while (true) {
    for (Eigen::Index i = 0; i < n; ++i)
      y[i] = center[i] - grid_radius + h * idx[static_cast<size_t>(i)];
    if (problem.set().contains(y, 0.0)) best = std::max(best, objective(y));
    Eigen::Index k = 0;
    while (k < n && ++idx[static_cast<size_t>(k)] == grid_n) {
      idx[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  if (!std::isfinite(best))
    throw input_error("brute_force_gap: no K-feasible grid point (grid too coarse)");
  return best;
}

}  // namespace dgap
