// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dgap/sampling.hpp"
#include "dgap/subdiff.hpp"

namespace dgap {

// Sampling region for the verification harness.
struct Region {
  enum class Shape { Ball, Box };

  static Region ball(Vector center, double radius);
  static Region box(Vector lo, Vector hi);

  Vector sample(SampleRng& rng) const;
  Eigen::Index dim() const;

  Shape shape;
  Vector center;  // Ball
  double radius = 0;
  Vector lo, hi;  // Box
};

// Outcome of one sampling certificate. min_ratio is the empirical infimum
// of the checked inequality's ratio over the active samples (NaN when none
// were active); theoretical_bound is the constant the theory predicts when
// the problem declares the needed moduli. pass means the empirical infimum
// clears the bound (or is positive with margin when no bound is known).
struct VerificationReport {
  std::string kind;  // "KL" | "ErrorBound" | "MuCertificate"
  long n_samples = 0;
  long n_active = 0;
  double min_ratio = 0;
  std::optional<double> theoretical_bound;
  bool pass = false;
  std::uint64_t seed = 0;
  Region region{Region::Shape::Ball, Vector(), 0, Vector(), Vector()};
};

// Joint infima of the three stationarity moduli over one sample stream:
// d(0,∂f_ab) against sqrt(f_ab), ‖x-π_a‖, and ‖π_a-π_b‖. The three vanish
// together exactly when the error-bound geometry degenerates.
struct EquivalenceSweep {
  long n_samples = 0;
  std::uint64_t seed = 0;
  double inf_vs_sqrt_gap;
  double inf_vs_residual;
  double inf_vs_proj_diff;
  long n_active_sqrt_gap = 0;
  long n_active_residual = 0;
  long n_active_proj_diff = 0;
};

// Kurdyka-Łojasiewicz certificate around the solution xbar: samples the
// ball of the given radius, keeps points with 1e-14 < f_ab < nu, and takes
// the infimum of d(0,∂f_ab)/sqrt(f_ab). With declared mu_star and L the
// theoretical bound is sqrt((b-a)/2)·mu/(mu+b+L). Requires xbar to pass
// is_solution and nu > 0.
VerificationReport kl_check(const VIProblem& problem, const GapParams& params,
                            const Vector& xbar, double radius, double nu,
                            long n_samples, std::uint64_t seed);

// Error-bound certificate over a region: on samples with
// 1e-14 < f_ab ≤ epsilon, checks sqrt(f_ab) ≥ kappa·d(x, S) with
// kappa = sqrt((b-a)/2)·mu/(mu+b+L) against the recorded solution set S.
// Requires the problem to declare solutions and mu_star.
VerificationReport error_bound_check(const VIProblem& problem,
                                     const GapParams& params, const Region& region,
                                     double epsilon, long n_samples,
                                     std::uint64_t seed);

EquivalenceSweep equivalence_sweep(const VIProblem& problem, const GapParams& params,
                                   const Region& region, long n_samples,
                                   std::uint64_t seed);

// Deterministic level selection for the harness: 2·max(f_ab over a 256-point
// pre-sweep of the region) + 1e-12, with the pre-sweep stream derived from
// seed. Used for nu and epsilon when the caller does not pin them.
double presweep_level(const VIProblem& problem, const GapParams& params,
                      const Region& region, std::uint64_t seed);

}  // namespace dgap
