// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dgap {

const char* to_string(DirectionKind kind) {
  return kind == DirectionKind::U ? "U" : "W";
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solved: return "Solved";
    case SolveStatus::MaxIters: return "MaxIters";
    case SolveStatus::LineSearchFailed: return "LineSearchFailed";
  }
  return "unknown";
}

ConfigValidation validate_config(const SolverConfig& config, const VIProblem& problem) {
  ConfigValidation v;
  auto fail = [&v](const std::string& msg) { v.violations.push_back(msg); };

  const double a = config.params.a, b = config.params.b;
  const double L = problem.lipschitz_L();

  if (!(config.rho > 0 && config.rho < 1))
    fail("rho must satisfy 0 < rho < 1");
  if (config.m_max < 1) fail("m_max must be >= 1");
  if (!(config.stop_fab > 0)) fail("stop_fab must be positive");
  if (config.max_iters < 1) fail("max_iters must be >= 1");

  std::ostringstream os;
  double beta_cap = (b - a) / (b + L);
  if (!(config.beta > 0 && config.beta < beta_cap)) {
    os.str("");
    os << "beta must satisfy 0 < beta < (b-a)/(b+L) = " << beta_cap
       << " (got " << config.beta << ")";
    fail(os.str());
  }
  if (!(config.alpha > (b + L) * config.beta && config.alpha < b - a)) {
    os.str("");
    os << "alpha must satisfy (b+L)*beta < alpha < b-a, i.e. "
       << (b + L) * config.beta << " < alpha < " << b - a << " (got "
       << config.alpha << ")";
    fail(os.str());
  }
  if (problem.mu_star()) {
    if (!(config.tau > 0 && config.tau < *problem.mu_star())) {
      os.str("");
      os << "tau must satisfy 0 < tau < mu_star = " << *problem.mu_star()
         << " (got " << config.tau << ")";
      fail(os.str());
    }
  } else {
    v.tau_verified = false;
    if (!(config.tau > 0)) fail("tau must be positive");
  }
  return v;
}

Direction choose_direction(const DGapEval& eval, double beta) {
  if (!(beta > 0)) throw input_error("choose_direction: beta must be positive");
  if (beta * eval.u.norm() < eval.w.norm())
    return {eval.w, DirectionKind::W};
  return {-eval.u, DirectionKind::U};
}

std::optional<LineSearchResult> armijo_search(
    const VIProblem& problem, const GapParams& params, const Vector& x,
    const Vector& d, double sigma, double rho, int m_max,
    std::optional<double> fab_at_x) {
  if (!(rho > 0 && rho < 1)) throw input_error("armijo_search: require 0 < rho < 1");
  if (!(sigma > 0)) throw input_error("armijo_search: sigma must be positive");
  if (m_max < 0) throw input_error("armijo_search: m_max must be >= 0");
  double dd = d.squaredNorm();
  if (dd == 0.0) throw input_error("armijo_search: direction must be nonzero");
  double f0 = fab_at_x ? *fab_at_x : d_gap(problem, params, x).fab;

  double t = 1.0;
  for (int m = 0; m <= m_max; ++m, t *= rho) {
    DGapEval trial = d_gap(problem, params, x + t * d);
    if (trial.fab - f0 <= -sigma * t * dd)
      return LineSearchResult{m, t, std::move(trial)};
  }
  return std::nullopt;
}

Trajectory solve(const VIProblem& problem, const SolverConfig& config,
                 const Vector& x0, bool allow_unverified) {
  ConfigValidation val = validate_config(config, problem);
  if (!val.ok() && !allow_unverified) {
    std::string msg = "solve: config violates the admissibility chains:";
    for (const auto& m : val.violations) msg += "\n  " + m;
    throw input_error(msg);
  }
  if (x0.size() != problem.dim())
    throw input_error("solve: x0 dimension mismatch");

  const double a = config.params.a, b = config.params.b;
  const double sigma_u = b - a - config.alpha;
  const double sigma_w = config.tau;

  Trajectory traj;
  traj.t_min_observed = std::numeric_limits<double>::quiet_NaN();
  Vector x = x0;
  DGapEval eval = d_gap(problem, config.params, x);

  for (int n = 0; n < config.max_iters; ++n) {
    if (eval.fab <= config.stop_fab) {
      traj.status = SolveStatus::Solved;
      traj.final_x = std::move(x);
      traj.final_fab = eval.fab;
      return traj;
    }
    Direction dir = choose_direction(eval, config.beta);
    if (dir.d.norm() == 0.0)
      throw std::logic_error(
          "solve: zero direction with f_ab above the stop threshold "
          "(inconsistent evaluation)");
    double sigma = dir.kind == DirectionKind::W ? sigma_w : sigma_u;
    auto ls = armijo_search(problem, config.params, x, dir.d, sigma, config.rho,
                            config.m_max, eval.fab);
    if (!ls) {
      traj.status = SolveStatus::LineSearchFailed;
      traj.final_x = std::move(x);
      traj.final_fab = eval.fab;
      return traj;
    }
    double subgrad_dist = clarke_generators(problem, config.params, x).hull_dist_zero;
    IterationRecord rec;
    rec.n = n;
    rec.x = x;
    rec.fab = eval.fab;
    rec.norm_u = eval.u.norm();
    rec.norm_w = eval.w.norm();
    rec.dir = dir.kind;
    rec.m = ls->m;
    rec.t = ls->t;
    rec.decrease = ls->accepted.fab - eval.fab;
    rec.subgrad_dist = subgrad_dist;
    traj.records.push_back(std::move(rec));
    if (std::isnan(traj.t_min_observed) || ls->t < traj.t_min_observed)
      traj.t_min_observed = ls->t;

    x += ls->t * dir.d;
    eval = std::move(ls->accepted);
  }

  traj.status = eval.fab <= config.stop_fab ? SolveStatus::Solved : SolveStatus::MaxIters;
  traj.final_x = std::move(x);
  traj.final_fab = eval.fab;
  return traj;
}

DiagnosticsReport diagnostics(const Trajectory& traj, const SolverConfig& config,
                              double lipschitz_L) {
  if (traj.records.size() < 2)
    throw input_error("diagnostics: need a trajectory with at least 2 records");

  const double a = config.params.a, b = config.params.b;
  DiagnosticsReport rep;
  rep.m1 = std::min(b - a - config.alpha, config.tau);
  rep.m2 = lipschitz_L + b + (b - a) / config.beta;
  rep.t_star = traj.t_min_observed;
  rep.eta = 1.0 - 2.0 * config.beta * config.beta * rep.m1 * rep.t_star / (b - a);
  rep.max_q_ratio = 0.0;
  rep.all_pass = true;

  const double slack = 1e-12;
  for (size_t i = 0; i < traj.records.size(); ++i) {
    const auto& r = traj.records[i];
    double next_fab =
        i + 1 < traj.records.size() ? traj.records[i + 1].fab : traj.final_fab;
    double step = r.t * (r.dir == DirectionKind::W ? r.norm_w : r.norm_u);

    IterationDiagnostics d;
    d.n = r.n;
    d.sufficient_decrease_ok =
        r.decrease <= -rep.m1 * step * step + slack * (1.0 + std::abs(r.fab));
    d.relative_error_ok =
        r.subgrad_dist <= (rep.m2 / rep.t_star) * step + slack * (1.0 + r.subgrad_dist);
    d.q_ratio = next_fab / r.fab;
    d.q_ratio_ok = d.q_ratio <= rep.eta + slack;
    rep.max_q_ratio = std::max(rep.max_q_ratio, d.q_ratio);
    rep.all_pass = rep.all_pass && d.sufficient_decrease_ok && d.relative_error_ok &&
                   d.q_ratio_ok;
    rep.iterations.push_back(std::move(d));
  }
  return rep;
}

}  // namespace dgap
