// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>

#include "dgap/errors.hpp"

namespace dgap {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class SetKind { Free, NonnegOrthant, Box, Ball };

const char* to_string(SetKind kind);

// Closed convex feasible set with an exact projection. Supported kinds:
// all of Rⁿ, the nonnegative orthant, a box with optionally infinite
// bounds, and a Euclidean ball.
class ConvexSet {
 public:
  static ConvexSet free(Eigen::Index dim);
  static ConvexSet nonneg_orthant(Eigen::Index dim);
  // lo/hi entries may be -inf/+inf; requires lo ≤ hi componentwise.
  static ConvexSet box(Vector lo, Vector hi);
  static ConvexSet ball(Vector center, double radius);

  SetKind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  // True for the kinds whose tangent cones this build can answer exactly.
  bool polyhedral() const { return kind_ != SetKind::Ball; }

  const Vector& lower() const;
  const Vector& upper() const;
  const Vector& center() const;
  double radius() const;

  // Euclidean projection P_K(y); exact for every supported kind.
  Vector project(const Vector& y) const;

  bool contains(const Vector& x, double tol = 1e-10) const;

  // Membership w ∈ T_K(x) for polyhedral kinds, testing the active-face
  // sign conditions within tol. Requires x ∈ K (within tol); throws
  // capability_error for the ball.
  bool tangent_cone_contains(const Vector& x, const Vector& w,
                             double tol = 1e-10) const;

 private:
  ConvexSet(SetKind kind, Eigen::Index dim) : kind_(kind), dim_(dim) {}

  void check_dim(const Vector& x, const char* where) const;

  SetKind kind_;
  Eigen::Index dim_;
  Vector lo_, hi_;      // Box
  Vector center_;       // Ball
  double radius_ = 0;   // Ball
};

}  // namespace dgap
