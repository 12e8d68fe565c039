// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgap/subdiff.hpp"

namespace dgap {

enum class DirectionKind { U, W };
enum class SolveStatus { Solved, MaxIters, LineSearchFailed };

const char* to_string(DirectionKind kind);
const char* to_string(SolveStatus status);

// Derivative-free descent configuration. The admissibility chains
//   0 < beta < (b-a)/(b+L)
//   (b+L)·beta < alpha < b-a
//   0 < tau < mu_star
// are what the linear-rate theory needs; validate_config checks them
// against a concrete problem. rho is the backtracking ratio, m_max the
// deepest backtracking exponent, stop_fab the termination threshold on
// f_ab, max_iters the outer iteration cap.
struct SolverConfig {
  GapParams params;
  double rho = 0.5;
  double alpha = 0;  // required; validate_config rejects the default
  double beta = 0;   // required
  double tau = 0;    // required
  int m_max = 60;
  double stop_fab = 1e-12;
  int max_iters = 10000;
};

struct ConfigValidation {
  std::vector<std::string> violations;
  // False when the problem declares no mu_star, so 0 < tau < mu_star could
  // not be checked; the config may still be used, flagged as unverified.
  bool tau_verified = true;

  bool ok() const { return violations.empty(); }
};

struct Direction {
  Vector d;
  DirectionKind kind;
};

// State at iterate x_n, the step taken from it, and the decrease achieved:
// decrease = f_ab(x_{n+1}) - f_ab(x_n) (strictly negative on every
// completed iteration). subgrad_dist is d(0, ∂f_ab(x_n)) from the
// generator hull.
struct IterationRecord {
  int n;
  Vector x;
  double fab;
  double norm_u;
  double norm_w;
  DirectionKind dir;
  int m;
  double t;
  double decrease;
  double subgrad_dist;
};

struct Trajectory {
  std::vector<IterationRecord> records;
  SolveStatus status;
  Vector final_x;
  double final_fab;
  double t_min_observed;  // min accepted step size; NaN on a zero-step run
};

struct LineSearchResult {
  int m;
  double t;
  DGapEval accepted;  // evaluation at x + t·d
};

struct IterationDiagnostics {
  int n;
  bool sufficient_decrease_ok;  // decrease ≤ -M1·‖x_{n+1}-x_n‖²
  bool relative_error_ok;       // subgrad_dist ≤ (M2/t*)·‖x_{n+1}-x_n‖
  double q_ratio;               // f_ab(x_{n+1}) / f_ab(x_n)
  bool q_ratio_ok;              // q_ratio ≤ eta
};

// Linear-rate certificate for a finished trajectory:
//   M1  = min{b-a-alpha, tau}
//   M2  = L + b + (b-a)/beta
//   eta = 1 - 2·beta²·M1·t*/(b-a),  t* = min accepted step
struct DiagnosticsReport {
  double m1;
  double m2;
  double t_star;
  double eta;
  std::vector<IterationDiagnostics> iterations;
  double max_q_ratio;
  bool all_pass;
};

// Checks parameter admissibility against the problem's L (and mu_star when
// declared). Basic range errors (rho, m_max, ...) are reported as
// violations too.
ConfigValidation validate_config(const SolverConfig& config, const VIProblem& problem);

// d = π_a(x) - x with slope b-a-alpha, unless beta·‖u‖ < ‖w‖ in which case
// d = π_a(x) - π_b(x) with slope tau. Ties go to the u-branch.
Direction choose_direction(const DGapEval& eval, double beta);

// Smallest m ∈ {0..m_max} with f_ab(x + rho^m·d) - f_ab(x) ≤ -sigma·rho^m·‖d‖².
// nullopt when no such m exists. fab_at_x, when given, skips the
// re-evaluation of f_ab(x).
std::optional<LineSearchResult> armijo_search(
    const VIProblem& problem, const GapParams& params, const Vector& x,
    const Vector& d, double sigma, double rho, int m_max,
    std::optional<double> fab_at_x = std::nullopt);

// Runs the descent from x0. Throws input_error when validate_config finds
// violations, unless allow_unverified is set; a missing mu_star only marks
// the tau check unverified and never blocks the run.
Trajectory solve(const VIProblem& problem, const SolverConfig& config,
                 const Vector& x0, bool allow_unverified = false);

// Audits a trajectory of ≥ 2 records against the sufficient-decrease,
// relative-error, and Q-linear-rate inequalities.
DiagnosticsReport diagnostics(const Trajectory& traj, const SolverConfig& config,
                              double lipschitz_L);

}  // namespace dgap
