// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "dgap/gap.hpp"

namespace dgap {

// Finite generator description of the Clarke subdifferential estimate
//   ∂f_ab(x) ⊆ co{ (Zᵀ - bI)(π_b - π_a) + (b-a)(x - π_a) : Z ∈ limit Jacobians },
// together with the distance from 0 to the generator hull.
struct SubgradientSet {
  std::vector<Vector> generators;
  double hull_dist_zero;
};

struct MinNormResult {
  double dist;
  std::vector<double> coefficients;  // simplex weights, aligned with input order
};

struct SolutionCharacterization {
  bool zero_in_subdiff;
  bool projections_equal;
  bool is_solution;  // conjunction of the two
};

struct MuEstimate {
  double mu_inf;    // NaN when no sample was usable
  long n_used;
  long n_skipped;
  bool conclusive;  // n_used > 0
};

// Gradient of f_ab where F is differentiable:
//   ∇f_ab(x) = (∇F(x)ᵀ - bI)(π_b - π_a) + (b-a)(x - π_a).
// Throws capability_error when the problem reports no Jacobian at x.
Vector grad_fab(const VIProblem& problem, const GapParams& params, const Vector& x);

// One generator per limit Jacobian reported by the problem at x. Throws
// input_error if the problem reports an empty limit set.
SubgradientSet clarke_generators(const VIProblem& problem, const GapParams& params,
                                 const Vector& x);

// Distance from the origin to co{generators}. Exact face enumeration for up
// to three generators; a Wolfe-style min-norm-point iteration above that,
// run to a duality gap of 1e-12 relative.
MinNormResult min_norm_in_hull(const std::vector<Vector>& generators);

// Subderivative df_ab(x)(w) at a point of differentiability:
//   (b-a)⟨x - π_a, w⟩ + ⟨(∇F(x) - bI)w, π_b - π_a⟩.
// Throws capability_error at kinks; use fd_directional there.
double subderivative_fab(const VIProblem& problem, const GapParams& params,
                         const Vector& x, const Vector& w_dir);

// Sampled difference quotient min over a geometric grid of step sizes
// t ∈ [t_min, t_max]: min_t (f_ab(x + t·w) - f_ab(x)) / t. An approximate
// upper estimate of the lower directional limit; returns 0 for w = 0.
double fd_directional(const VIProblem& problem, const GapParams& params,
                      const Vector& x, const Vector& w_dir,
                      double t_min = 1e-8, double t_max = 1e-2, int n_grid = 16);

// x solves the VI iff 0 ∈ ∂f_ab(x) AND π_a(x) = π_b(x); either condition
// alone can hold at non-solutions.
SolutionCharacterization solution_characterization(const VIProblem& problem,
                                                   const GapParams& params,
                                                   const Vector& x,
                                                   double tol = 1e-10);

// Sampled restricted-monotonicity modulus: over the given points, the
// infimum of ⟨∇F(x)s, s⟩ / ‖s‖² with s = π_a(x) - π_b(x), skipping points
// where F is not differentiable or ‖s‖ ≤ 1e-8. All-skipped is reported as
// inconclusive, not an error.
MuEstimate mu_estimate(const VIProblem& problem, const GapParams& params,
                       const std::vector<Vector>& sample_points);

}  // namespace dgap
