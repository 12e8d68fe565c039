// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0
//
// Test-side oracles, independent of the library's evaluation paths.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dgap/dgap.hpp"

namespace oracles {

using dgap::Vector;

// Central finite differences of f_ab, the reference for gradient checks.
inline Vector fd_gradient(const dgap::VIProblem& problem,
                          const dgap::GapParams& params, const Vector& x,
                          double h = 1e-6) {
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vector xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (dgap::d_gap(problem, params, xp).fab -
            dgap::d_gap(problem, params, xm).fab) /
           (2.0 * h);
  }
  return g;
}

// Exhaustive simplex-grid minimizer of ‖Σ λ_i v_i‖ for up to 3 generators;
// accurate to O(1/resolution) in the coefficients.
inline double min_norm_grid(const std::vector<Vector>& gens, int resolution) {
  double best = std::numeric_limits<double>::infinity();
  if (gens.size() == 1) return gens[0].norm();
  if (gens.size() == 2) {
    for (int i = 0; i <= resolution; ++i) {
      double l = static_cast<double>(i) / resolution;
      best = std::min(best, (l * gens[0] + (1.0 - l) * gens[1]).norm());
    }
    return best;
  }
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j <= resolution - i; ++j) {
      double l0 = static_cast<double>(i) / resolution;
      double l1 = static_cast<double>(j) / resolution;
      best = std::min(best,
                      (l0 * gens[0] + l1 * gens[1] + (1.0 - l0 - l1) * gens[2]).norm());
    }
  }
  return best;
}

// Frank-Wolfe on ‖Vλ‖² over the simplex: an independent iterative check for
// larger generator sets. Returns the achieved norm.
inline double min_norm_frank_wolfe(const std::vector<Vector>& gens, int iters) {
  const size_t k = gens.size();
  std::vector<double> lambda(k, 1.0 / static_cast<double>(k));
  Vector p = Vector::Zero(gens[0].size());
  for (size_t i = 0; i < k; ++i) p += lambda[i] * gens[i];
  for (int it = 0; it < iters; ++it) {
    size_t j_best = 0;
    double ip_best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < k; ++j) {
      double ip = p.dot(gens[j]);
      if (ip < ip_best) {
        ip_best = ip;
        j_best = j;
      }
    }
    Vector dir = gens[j_best] - p;
    double denom = dir.squaredNorm();
    if (denom == 0.0) break;
    double step = std::clamp(-p.dot(dir) / denom, 0.0, 1.0);
    if (step == 0.0) break;
    for (size_t i = 0; i < k; ++i) lambda[i] *= 1.0 - step;
    lambda[j_best] += step;
    p = (1.0 - step) * p + step * gens[j_best];
  }
  return p.norm();
}

// Optimality certificate for a claimed min-norm point: p must be a convex
// combination achieving the distance, and every generator must satisfy
// ⟨p, v_j⟩ ≥ ‖p‖² - tol (supporting-hyperplane condition).
inline bool min_norm_certificate(const std::vector<Vector>& gens,
                                 const dgap::MinNormResult& result, double tol) {
  double sum = 0.0;
  Vector p = Vector::Zero(gens[0].size());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (result.coefficients[i] < -tol) return false;
    sum += result.coefficients[i];
    p += result.coefficients[i] * gens[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) return false;
  if (std::abs(p.norm() - result.dist) > tol * (1.0 + result.dist)) return false;
  double pp = p.squaredNorm();
  for (const auto& v : gens)
    if (p.dot(v) < pp - tol * (1.0 + pp)) return false;
  return true;
}

// Grid minimizer of ‖z - y‖ over feasible points: a projection oracle.
inline Vector grid_project(const dgap::ConvexSet& set, const Vector& y,
                           double radius, int n) {
  const Eigen::Index dim = set.dim();
  Vector best;
  double best_dist = std::numeric_limits<double>::infinity();
  std::vector<int> idx(static_cast<size_t>(dim), 0);
  Vector z(dim);
  const double h = 2.0 * radius / (n - 1);
  while (true) {
    for (Eigen::Index i = 0; i < dim; ++i)
      z[i] = y[i] - radius + h * idx[static_cast<size_t>(i)];
    if (set.contains(z, 0.0)) {
      double d = (z - y).norm();
      if (d < best_dist) {
        best_dist = d;
        best = z;
      }
    }
    Eigen::Index k = 0;
    while (k < dim && ++idx[static_cast<size_t>(k)] == n) {
      idx[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == dim) break;
  }
  return best;
}

// Li-Ng projection difference π_a(x) - π_b(x) for b = 1, from the four-case
// closed form.
inline Vector li_ng_pa_minus_pb(const Vector& x, double a) {
  Vector r = Vector::Zero(2);
  double c = (a - 1.0) / a;
  if (x[0] <= 0 && x[1] >= 0) {
    r[0] = c * x[0];
  } else if (x[0] <= 0 && x[1] <= 0) {
    r[0] = c * x[0];
    r[1] = c * x[1];
  } else if (x[0] >= 0 && x[0] <= (2.0 * (a - 1.0) / 3.0) * x[1]) {
    r[1] = c * x[1] - 3.0 / (2.0 * a) * x[0];
  }
  return r;
}

}  // namespace oracles
