// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include "dgap/problem.hpp"

namespace dgap {

// Value of the regularized gap f_c(x) = max_{y∈K} {⟨F(x), x-y⟩ - (c/2)‖y-x‖²}
// together with its unique maximizer π_c(x) = P_K(x - F(x)/c).
struct RegularizedGap {
  double value;
  Vector pi_c;
};

// One evaluation of the D-gap function f_ab = f_a - f_b at x, with the
// quantities every downstream consumer needs:
//
//   u = x - π_a(x)        natural-residual style vector at modulus a
//   w = π_a(x) - π_b(x)   projection difference
//
// fab is computed from the cancellation-free identity
//   f_ab(x) = ⟨F(x), π_b - π_a⟩ - (a/2)‖x-π_a‖² + (b/2)‖x-π_b‖²,
// not as a difference of the two maxima.
struct DGapEval {
  Vector x;
  Vector fx;        // F(x)
  Vector pi_a;
  Vector pi_b;
  Vector u;         // x - pi_a
  Vector w;         // pi_a - pi_b
  double fab;
  double f_a_val;   // regularized gap at modulus a
  double f_b_val;   // regularized gap at modulus b
};

// Outcome of the elementary D-gap inequalities at one point:
//   sandwich          ((b-a)/2)‖x-π_b‖² + (a/2)‖w‖² ≤ f_ab ≤ ((b-a)/2)‖u‖² - (b/2)‖w‖²
//   residual_ratios   ‖w‖ ≤ ((b-a)/a)‖u‖,  ‖x-π_b‖ ≤ ‖u‖ ≤ (b/a)‖x-π_b‖
//   inner_product_d   ⟨a(x-π_a) - b(x-π_b), π_a - π_b⟩ ≥ 0
//   cone_membership_e w ∈ T_K(π_b), -w ∈ T_K(π_a), ⟨F(x), w⟩ ≤ 0
// Clause (e) needs tangent cones, so it is skipped (and flagged) on
// non-polyhedral sets.
struct BasicPropertyReport {
  bool sandwich = false;
  bool residual_ratios = false;
  bool inner_product_d = false;
  bool cone_membership_e = false;
  bool e_skipped = false;

  bool all() const {
    return sandwich && residual_ratios && inner_product_d &&
           (cone_membership_e || e_skipped);
  }
};

// π_c(x) = P_K(x - F(x)/c). Requires c > 0.
Vector pi(const VIProblem& problem, double c, const Vector& x);

RegularizedGap regularized_gap(const VIProblem& problem, double c, const Vector& x);

DGapEval d_gap(const VIProblem& problem, const GapParams& params, const Vector& x);

// Checks the inequalities above with slack tol·max(1, |lhs|, |rhs|) per
// comparison (tol is relative for large values, absolute near zero).
BasicPropertyReport basic_property_report(const VIProblem& problem,
                                          const GapParams& params,
                                          const Vector& x, double tol = 1e-9);

// Natural-residual test at modulus 1: true iff ‖x - π_1(x)‖ ≤ tol.
bool is_solution(const VIProblem& problem, const Vector& x, double tol = 1e-10);

// Test oracle: maximizes the defining objective ⟨F(x), x-y⟩ - (c/2)‖y-x‖²
// over the K-feasible points of a uniform grid_n-per-axis grid on the box
// of radius grid_radius around π_c(x). Cost grows as grid_n^dim; guarded
// against absurd sizes. Satisfies brute ≤ f_c(x) ≤ brute + O(spacing²).
double brute_force_gap(const VIProblem& problem, double c, const Vector& x,
                       double grid_radius, int grid_n);

}  // namespace dgap
