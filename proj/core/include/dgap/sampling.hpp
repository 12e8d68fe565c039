// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dgap/convex_set.hpp"

namespace dgap {

// Seeded sample stream built only from std::mt19937_64 bit output, so the
// same seed produces the same doubles on every platform (the standard
// distributions are implementation-defined and are deliberately avoided).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Vector uniform_box(const Vector& lo, const Vector& hi) {
    Vector x(lo.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = uniform(lo[i], hi[i]);
    return x;
  }

  // Uniform in the closed ball. Rejection from the bounding cube in low
  // dimension; direction/radius sampling when rejection would be wasteful.
  Vector in_ball(const Vector& center, double radius) {
    const Eigen::Index n = center.size();
    if (n <= 6) {
      while (true) {
        Vector x(n);
        for (Eigen::Index i = 0; i < n; ++i) x[i] = uniform(-1.0, 1.0);
        if (x.squaredNorm() <= 1.0) return center + radius * x;
      }
    }
    Vector d(n);
    for (Eigen::Index i = 0; i < n; ++i) d[i] = normal();
    double norm = d.norm();
    if (norm == 0.0) return center;
    double r = radius * std::pow(uniform01(), 1.0 / static_cast<double>(n));
    return center + (r / norm) * d;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dgap
