// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgap/problem.hpp"

namespace dgap {

// Affine map F(x) = Ax + q; the Jacobian is A everywhere.
VIProblem make_affine(std::string name, ConvexSet set, Matrix A, Vector q,
                      double lipschitz_L);

// One cell of a continuous piecewise-affine map. signs restricts each
// coordinate of the closed cell: +1 → x_i ≥ 0, -1 → x_i ≤ 0, 0 → free.
struct AffinePiece {
  std::vector<int> signs;
  Matrix A;
  Vector q;
};

// Validates at construction that the cells cover sampled points and that
// adjacent pieces agree on shared faces within 1e-10 (continuity), then
// evaluates F by cell lookup. b_jacobian(x) lists the matrices of every
// piece whose closed cell contains x (deduplicated); jacobian(x) is defined
// when those matrices agree.
VIProblem make_piecewise_affine(std::string name, ConvexSet set,
                                std::vector<AffinePiece> pieces,
                                double lipschitz_L);

// Benchmark instances:
//   affine_pd        K = R², F = diag(2,3)x - (2,3); strongly monotone,
//                    solution (1,1), L = 3, mu_star = 2
//   li_ng            K = R²₊, F(x) = (x₁ + (x₁)₊(x₂)₊, x₂ + 1.5(x₁)₊);
//                    nonsmooth and nonmonotone, solution (0,0), mu_star = 1,
//                    L = 4.04 certified on the box [-2,2]²
//   constant_orthant K = R²₊, F ≡ (1,1); flat merit landscape away from the
//                    solution (0,0), L = 0, no mu_star
//   identity_free    K = R³, F = x; closed-form f_ab for oracle tests
VIProblem builtin(const std::string& id);
std::vector<std::string> builtin_ids();

// Reads a "dgap-vi/1" JSON problem file. All numeric matrices are row-major
// lists of lists; box bounds use null for an absent (infinite) bound.
// Errors name the offending field path.
VIProblem load_problem(const std::string& path);
VIProblem parse_problem(const std::string& json_text);

double distance_to_solutions(const VIProblem& problem, const Vector& x);

// FNV-1a 64-bit fingerprint of a problem source (file bytes or builtin
// tag), used to stamp run manifests.
std::uint64_t fingerprint(const std::string& bytes);

}  // namespace dgap
