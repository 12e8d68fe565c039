// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgap/convex_set.hpp"

namespace dgap {

// Regularization pair for the D-gap function f_ab = f_a - f_b.
struct GapParams {
  double a;
  double b;

  GapParams(double a_, double b_);  // requires 0 < a < b
};

// Known solution set of a problem instance: a finite point list or an
// affine set {offset + span(columns of basis)}. Used only by tests and the
// error-bound harness; absent on problems without a known answer.
class SolutionSet {
 public:
  static SolutionSet from_points(std::vector<Vector> points);
  static SolutionSet from_affine(Vector offset, Matrix basis);

  double distance(const Vector& x) const;

 private:
  SolutionSet() = default;
  std::vector<Vector> points_;
  std::optional<std::pair<Vector, Matrix>> affine_;  // offset, orthonormalized basis
};

// Variational inequality instance: find x ∈ K with ⟨F(x), y - x⟩ ≥ 0 for
// all y ∈ K. F is locally Lipschitz and not assumed monotone.
//
//   map          F(x)
//   jacobian     ∇F(x) where F is differentiable, nullopt elsewhere
//   b_jacobian   the limit set of Jacobians at x (one matrix at smooth
//                points, the hand-coded kink limits for builtins, all
//                covering-piece matrices for piecewise-affine maps)
//
// lipschitz_L is a bound on the Lipschitz modulus of F, certified on
// lipschitz_box when set and globally otherwise. mu_star is a declared
// restricted-strong-monotonicity modulus, when one is known.
class VIProblem {
 public:
  using MapFn = std::function<Vector(const Vector&)>;
  using JacobianFn = std::function<std::optional<Matrix>(const Vector&)>;
  using BJacobianFn = std::function<std::vector<Matrix>(const Vector&)>;

  VIProblem(std::string name, ConvexSet set, MapFn map, JacobianFn jacobian,
            BJacobianFn b_jacobian, double lipschitz_L);

  const std::string& name() const { return name_; }
  Eigen::Index dim() const { return set_.dim(); }
  const ConvexSet& set() const { return set_; }
  double lipschitz_L() const { return lipschitz_L_; }

  Vector map(const Vector& x) const;
  std::optional<Matrix> jacobian(const Vector& x) const;
  std::vector<Matrix> b_jacobian(const Vector& x) const;

  const std::optional<double>& mu_star() const { return mu_star_; }
  const std::optional<SolutionSet>& solutions() const { return solutions_; }
  const std::optional<GapParams>& default_params() const { return default_params_; }
  // Box on which lipschitz_L was certified ({lo, hi}); empty means global.
  const std::optional<std::pair<Vector, Vector>>& lipschitz_box() const {
    return lipschitz_box_;
  }

  VIProblem& with_mu_star(double mu);
  VIProblem& with_solutions(SolutionSet s);
  VIProblem& with_default_params(GapParams p);
  VIProblem& with_lipschitz_box(Vector lo, Vector hi);

 private:
  void check_dim(const Vector& x, const char* where) const;

  std::string name_;
  ConvexSet set_;
  MapFn map_;
  JacobianFn jacobian_;
  BJacobianFn b_jacobian_;
  double lipschitz_L_;
  std::optional<double> mu_star_;
  std::optional<SolutionSet> solutions_;
  std::optional<GapParams> default_params_;
  std::optional<std::pair<Vector, Vector>> lipschitz_box_;
};

}  // namespace dgap
