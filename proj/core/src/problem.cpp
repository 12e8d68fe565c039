// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/problem.hpp"

#include <Eigen/QR>

#include <cmath>
#include <limits>
#include <string>

namespace dgap {

GapParams::GapParams(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0) || !(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw input_error("GapParams: require 0 < a < b");
}

SolutionSet SolutionSet::from_points(std::vector<Vector> points) {
  if (points.empty())
    throw input_error("SolutionSet::from_points: point list must be nonempty");
  SolutionSet s;
  s.points_ = std::move(points);
  return s;
}

SolutionSet SolutionSet::from_affine(Vector offset, Matrix basis) {
  if (basis.rows() != offset.size())
    throw input_error("SolutionSet::from_affine: basis rows must match offset length");
  SolutionSet s;
  if (basis.cols() == 0) {
    s.points_.push_back(std::move(offset));
    return s;
  }
  Eigen::HouseholderQR<Matrix> qr(basis);
  Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
  s.affine_ = {std::move(offset), std::move(q)};
  return s;
}

double SolutionSet::distance(const Vector& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points_) {
    if (p.size() != x.size())
      throw input_error("SolutionSet::distance: dimension mismatch");
    best = std::min(best, (x - p).norm());
  }
  if (affine_) {
    const auto& [offset, q] = *affine_;
    if (offset.size() != x.size())
      throw input_error("SolutionSet::distance: dimension mismatch");
    Vector r = x - offset;
    best = std::min(best, (r - q * (q.transpose() * r)).norm());
  }
  return best;
}

VIProblem::VIProblem(std::string name, ConvexSet set, MapFn map,
                     JacobianFn jacobian, BJacobianFn b_jacobian,
                     double lipschitz_L)
    : name_(std::move(name)),
      set_(std::move(set)),
      map_(std::move(map)),
      jacobian_(std::move(jacobian)),
      b_jacobian_(std::move(b_jacobian)),
      lipschitz_L_(lipschitz_L) {
  if (!map_) throw input_error("VIProblem: map must be set");
  if (!(lipschitz_L_ >= 0) || !std::isfinite(lipschitz_L_))
    throw input_error("VIProblem: lipschitz_L must be finite and >= 0");
}

void VIProblem::check_dim(const Vector& x, const char* where) const {
  if (x.size() != dim())
    throw input_error(std::string(where) + ": expected dimension " +
                      std::to_string(dim()) + ", got " + std::to_string(x.size()));
}

Vector VIProblem::map(const Vector& x) const {
  check_dim(x, "VIProblem::map");
  Vector fx = map_(x);
  if (fx.size() != dim())
    throw input_error("VIProblem::map: map returned wrong dimension");
  return fx;
}

std::optional<Matrix> VIProblem::jacobian(const Vector& x) const {
  check_dim(x, "VIProblem::jacobian");
  if (!jacobian_) return std::nullopt;
  return jacobian_(x);
}

std::vector<Matrix> VIProblem::b_jacobian(const Vector& x) const {
  check_dim(x, "VIProblem::b_jacobian");
  if (!b_jacobian_) return {};
  return b_jacobian_(x);
}

VIProblem& VIProblem::with_mu_star(double mu) {
  if (!(mu > 0)) throw input_error("VIProblem: mu_star must be positive");
  mu_star_ = mu;
  return *this;
}

VIProblem& VIProblem::with_solutions(SolutionSet s) {
  solutions_ = std::move(s);
  return *this;
}

VIProblem& VIProblem::with_default_params(GapParams p) {
  default_params_ = p;
  return *this;
}

VIProblem& VIProblem::with_lipschitz_box(Vector lo, Vector hi) {
  if (lo.size() != dim() || hi.size() != dim())
    throw input_error("VIProblem: lipschitz_box dimension mismatch");
  lipschitz_box_ = {std::move(lo), std::move(hi)};
  return *this;
}

}  // namespace dgap
