// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/convex_set.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dgap {

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Free: return "free";
    case SetKind::NonnegOrthant: return "nonneg_orthant";
    case SetKind::Box: return "box";
    case SetKind::Ball: return "ball";
  }
  return "unknown";
}

ConvexSet ConvexSet::free(Eigen::Index dim) {
  if (dim < 1) throw input_error("ConvexSet::free: dim must be >= 1");
  return ConvexSet(SetKind::Free, dim);
}

ConvexSet ConvexSet::nonneg_orthant(Eigen::Index dim) {
  if (dim < 1) throw input_error("ConvexSet::nonneg_orthant: dim must be >= 1");
  return ConvexSet(SetKind::NonnegOrthant, dim);
}

ConvexSet ConvexSet::box(Vector lo, Vector hi) {
  if (lo.size() < 1 || lo.size() != hi.size())
    throw input_error("ConvexSet::box: lo and hi must have equal positive length");
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (std::isnan(lo[i]) || std::isnan(hi[i]) || lo[i] > hi[i])
      throw input_error("ConvexSet::box: requires lo[i] <= hi[i] at index " +
                        std::to_string(i));
  }
  ConvexSet s(SetKind::Box, lo.size());
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

ConvexSet ConvexSet::ball(Vector center, double radius) {
  if (center.size() < 1)
    throw input_error("ConvexSet::ball: center must have positive length");
  if (!(radius > 0) || !std::isfinite(radius))
    throw input_error("ConvexSet::ball: radius must be positive and finite");
  ConvexSet s(SetKind::Ball, center.size());
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

const Vector& ConvexSet::lower() const {
  if (kind_ != SetKind::Box) throw input_error("ConvexSet::lower: not a box");
  return lo_;
}

const Vector& ConvexSet::upper() const {
  if (kind_ != SetKind::Box) throw input_error("ConvexSet::upper: not a box");
  return hi_;
}

const Vector& ConvexSet::center() const {
  if (kind_ != SetKind::Ball) throw input_error("ConvexSet::center: not a ball");
  return center_;
}

double ConvexSet::radius() const {
  if (kind_ != SetKind::Ball) throw input_error("ConvexSet::radius: not a ball");
  return radius_;
}

void ConvexSet::check_dim(const Vector& x, const char* where) const {
  if (x.size() != dim_)
    throw input_error(std::string(where) + ": expected dimension " +
                      std::to_string(dim_) + ", got " + std::to_string(x.size()));
}

Vector ConvexSet::project(const Vector& y) const {
  check_dim(y, "ConvexSet::project");
  switch (kind_) {
    case SetKind::Free:
      return y;
    case SetKind::NonnegOrthant:
      return y.cwiseMax(0.0);
    case SetKind::Box:
      return y.cwiseMax(lo_).cwiseMin(hi_);
    case SetKind::Ball: {
      Vector r = y - center_;
      double norm = r.norm();
      if (norm <= radius_) return y;
      return center_ + (radius_ / norm) * r;
    }
  }
  throw input_error("ConvexSet::project: unknown kind");
}

bool ConvexSet::contains(const Vector& x, double tol) const {
  check_dim(x, "ConvexSet::contains");
  switch (kind_) {
    case SetKind::Free:
      return true;
    case SetKind::NonnegOrthant:
      return (x.array() >= -tol).all();
    case SetKind::Box:
      return (x.array() >= lo_.array() - tol).all() &&
             (x.array() <= hi_.array() + tol).all();
    case SetKind::Ball:
      return (x - center_).norm() <= radius_ + tol;
  }
  return false;
}

bool ConvexSet::tangent_cone_contains(const Vector& x, const Vector& w,
                                      double tol) const {
  check_dim(x, "ConvexSet::tangent_cone_contains");
  check_dim(w, "ConvexSet::tangent_cone_contains");
  if (!contains(x, tol))
    throw input_error("ConvexSet::tangent_cone_contains: base point is not in the set");
  switch (kind_) {
    case SetKind::Free:
      return true;
    case SetKind::NonnegOrthant:
      // Active constraints x_i = 0 demand w_i >= 0.
      for (Eigen::Index i = 0; i < dim_; ++i)
        if (x[i] <= tol && w[i] < -tol) return false;
      return true;
    case SetKind::Box:
      for (Eigen::Index i = 0; i < dim_; ++i) {
        if (std::isfinite(lo_[i]) && x[i] - lo_[i] <= tol && w[i] < -tol) return false;
        if (std::isfinite(hi_[i]) && hi_[i] - x[i] <= tol && w[i] > tol) return false;
      }
      return true;
    case SetKind::Ball:
      throw capability_error(
          "ConvexSet::tangent_cone_contains: tangent cones are only available "
          "for polyhedral kinds (free, nonneg_orthant, box)");
  }
  return false;
}

}  // namespace dgap
