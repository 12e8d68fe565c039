// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/subdiff.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dgap {

namespace {

constexpr double kWolfeGapTol = 1e-12;
constexpr double kSimplexTol = 1e-12;

// Min-norm point in the affine hull of the selected generators: solve the
// bordered KKT system [G 1; 1ᵀ 0][μ; ν] = [0; 1] with G the Gram matrix.
// Returns false when the system is inconsistent beyond roundoff.
bool affine_min_norm(const std::vector<Vector>& gens, const std::vector<int>& sel,
                     Eigen::VectorXd& mu) {
  const int k = static_cast<int>(sel.size());
  Matrix kkt = Matrix::Zero(k + 1, k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      kkt(i, j) = gens[static_cast<size_t>(sel[static_cast<size_t>(i)])]
                      .dot(gens[static_cast<size_t>(sel[static_cast<size_t>(j)])]);
    kkt(i, k) = kkt(k, i) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs[k] = 1.0;
  Eigen::VectorXd z = kkt.completeOrthogonalDecomposition().solve(rhs);
  double scale = std::max(1.0, kkt.cwiseAbs().maxCoeff());
  if ((kkt * z - rhs).norm() > 1e-8 * scale) return false;
  mu = z.head(k);
  return true;
}

Vector combine(const std::vector<Vector>& gens, const std::vector<int>& sel,
               const Eigen::VectorXd& mu) {
  Vector p = Vector::Zero(gens.front().size());
  for (size_t i = 0; i < sel.size(); ++i)
    p += mu[static_cast<Eigen::Index>(i)] * gens[static_cast<size_t>(sel[i])];
  return p;
}

MinNormResult min_norm_small(const std::vector<Vector>& gens) {
  const int k = static_cast<int>(gens.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_coeffs(static_cast<size_t>(k), 0.0);
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) sel.push_back(i);
    Eigen::VectorXd mu;
    if (!affine_min_norm(gens, sel, mu)) continue;
    if ((mu.array() < -kSimplexTol).any()) continue;
    mu = mu.cwiseMax(0.0);
    mu /= mu.sum();
    double dist = combine(gens, sel, mu).norm();
    if (dist < best) {
      best = dist;
      std::fill(best_coeffs.begin(), best_coeffs.end(), 0.0);
      for (size_t i = 0; i < sel.size(); ++i)
        best_coeffs[static_cast<size_t>(sel[i])] = mu[static_cast<Eigen::Index>(i)];
    }
  }
  return {best, std::move(best_coeffs)};
}

MinNormResult min_norm_wolfe(const std::vector<Vector>& gens) {
  const int k = static_cast<int>(gens.size());
  int start = 0;
  for (int i = 1; i < k; ++i)
    if (gens[static_cast<size_t>(i)].squaredNorm() <
        gens[static_cast<size_t>(start)].squaredNorm())
      start = i;

  std::vector<int> sel{start};
  Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
  const int max_major = 16 * k + 64;
  for (int major = 0; major < max_major; ++major) {
    Vector x = combine(gens, sel, lambda);
    double xx = x.squaredNorm();
    int j_best = 0;
    double ip_best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      double ip = x.dot(gens[static_cast<size_t>(j)]);
      if (ip < ip_best) {
        ip_best = ip;
        j_best = j;
      }
    }
    if (xx - ip_best <= kWolfeGapTol * std::max(1.0, xx)) break;
    if (std::find(sel.begin(), sel.end(), j_best) != sel.end()) break;
    sel.push_back(j_best);
    lambda.conservativeResize(lambda.size() + 1);
    lambda[lambda.size() - 1] = 0.0;

    // Minor cycle: pull the affine minimizer back into the simplex.
    while (true) {
      Eigen::VectorXd mu;
      if (!affine_min_norm(gens, sel, mu)) {
        // Degenerate Gram system; drop the newest point and stop improving.
        sel.pop_back();
        lambda.conservativeResize(lambda.size() - 1);
        double s = lambda.sum();
        if (s > 0) lambda /= s;
        break;
      }
      if ((mu.array() >= -kSimplexTol).all()) {
        lambda = mu.cwiseMax(0.0);
        lambda /= lambda.sum();
        break;
      }
      double theta = 1.0;
      for (Eigen::Index i = 0; i < mu.size(); ++i)
        if (mu[i] < lambda[i])
          theta = std::min(theta, lambda[i] / (lambda[i] - mu[i]));
      lambda = (1.0 - theta) * lambda + theta * mu;
      std::vector<int> keep_sel;
      std::vector<double> keep_lambda;
      for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] > kSimplexTol) {
          keep_sel.push_back(sel[static_cast<size_t>(i)]);
          keep_lambda.push_back(lambda[i]);
        }
      }
      if (keep_sel.empty()) {
        keep_sel.push_back(sel[static_cast<size_t>(0)]);
        keep_lambda.push_back(1.0);
      }
      sel = std::move(keep_sel);
      lambda = Eigen::Map<Eigen::VectorXd>(keep_lambda.data(),
                                           static_cast<Eigen::Index>(keep_lambda.size()));
      lambda /= lambda.sum();
    }
  }

  Vector x = combine(gens, sel, lambda);
  std::vector<double> coeffs(static_cast<size_t>(k), 0.0);
  for (size_t i = 0; i < sel.size(); ++i)
    coeffs[static_cast<size_t>(sel[i])] = lambda[static_cast<Eigen::Index>(i)];
  return {x.norm(), std::move(coeffs)};
}

}  // namespace

MinNormResult min_norm_in_hull(const std::vector<Vector>& generators) {
  if (generators.empty())
    throw input_error("min_norm_in_hull: generator list must be nonempty");
  const Eigen::Index n = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != n)
      throw input_error("min_norm_in_hull: generators must share one dimension");
  if (generators.size() == 1)
    return {generators.front().norm(), {1.0}};
  if (generators.size() <= 3) return min_norm_small(generators);
  return min_norm_wolfe(generators);
}

Vector grad_fab(const VIProblem& problem, const GapParams& params, const Vector& x) {
  auto jac = problem.jacobian(x);
  if (!jac)
    throw capability_error("grad_fab: F is not differentiable at this point");
  DGapEval e = d_gap(problem, params, x);
  Vector wp = e.pi_b - e.pi_a;
  return jac->transpose() * wp - params.b * wp + (params.b - params.a) * e.u;
}

SubgradientSet clarke_generators(const VIProblem& problem, const GapParams& params,
                                 const Vector& x) {
  std::vector<Matrix> limits = problem.b_jacobian(x);
  if (limits.empty())
    throw input_error("clarke_generators: problem reports an empty limit Jacobian set");
  DGapEval e = d_gap(problem, params, x);
  Vector wp = e.pi_b - e.pi_a;
  SubgradientSet s;
  s.generators.reserve(limits.size());
  for (const auto& z : limits) {
    if (z.rows() != problem.dim() || z.cols() != problem.dim())
      throw input_error("clarke_generators: limit Jacobian has wrong shape");
    s.generators.push_back(z.transpose() * wp - params.b * wp +
                           (params.b - params.a) * e.u);
  }
  s.hull_dist_zero = min_norm_in_hull(s.generators).dist;
  return s;
}

double subderivative_fab(const VIProblem& problem, const GapParams& params,
                         const Vector& x, const Vector& w_dir) {
  auto jac = problem.jacobian(x);
  if (!jac)
    throw capability_error(
        "subderivative_fab: exact subderivatives are only available where F "
        "is differentiable; use fd_directional instead");
  DGapEval e = d_gap(problem, params, x);
  return (params.b - params.a) * e.u.dot(w_dir) +
         ((*jac) * w_dir - params.b * w_dir).dot(e.pi_b - e.pi_a);
}

double fd_directional(const VIProblem& problem, const GapParams& params,
                      const Vector& x, const Vector& w_dir, double t_min,
                      double t_max, int n_grid) {
  if (!(t_min > 0) || !(t_min < t_max))
    throw input_error("fd_directional: require 0 < t_min < t_max");
  if (n_grid < 2) throw input_error("fd_directional: n_grid must be >= 2");
  if (w_dir.norm() == 0.0) return 0.0;
  double f0 = d_gap(problem, params, x).fab;
  double ratio = std::pow(t_max / t_min, 1.0 / (n_grid - 1));
  double best = std::numeric_limits<double>::infinity();
  double t = t_min;
  for (int i = 0; i < n_grid; ++i, t *= ratio) {
    double ft = d_gap(problem, params, x + t * w_dir).fab;
    best = std::min(best, (ft - f0) / t);
  }
  return best;
}

SolutionCharacterization solution_characterization(const VIProblem& problem,
                                                   const GapParams& params,
                                                   const Vector& x, double tol) {
  if (!(tol >= 0)) throw input_error("solution_characterization: tol must be >= 0");
  SubgradientSet s = clarke_generators(problem, params, x);
  DGapEval e = d_gap(problem, params, x);
  SolutionCharacterization c;
  c.zero_in_subdiff = s.hull_dist_zero <= tol;
  c.projections_equal = e.w.norm() <= tol;
  c.is_solution = c.zero_in_subdiff && c.projections_equal;
  return c;
}

MuEstimate mu_estimate(const VIProblem& problem, const GapParams& params,
                       const std::vector<Vector>& sample_points) {
  MuEstimate est{std::numeric_limits<double>::quiet_NaN(), 0, 0, false};
  for (const auto& x : sample_points) {
    auto jac = problem.jacobian(x);
    if (!jac) {
      ++est.n_skipped;
      continue;
    }
    DGapEval e = d_gap(problem, params, x);
    double ns2 = e.w.squaredNorm();
    if (std::sqrt(ns2) <= 1e-8) {
      ++est.n_skipped;
      continue;
    }
    double ratio = e.w.dot((*jac) * e.w) / ns2;
    est.mu_inf = est.n_used == 0 ? ratio : std::min(est.mu_inf, ratio);
    ++est.n_used;
  }
  est.conclusive = est.n_used > 0;
  return est;
}

}  // namespace dgap
