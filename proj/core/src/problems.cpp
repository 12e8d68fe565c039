// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/problems.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <utility>

namespace dgap {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix identity2() { return Matrix::Identity(2, 2); }

}  // namespace

VIProblem make_affine(std::string name, ConvexSet set, Matrix A, Vector q,
                      double lipschitz_L) {
  const Eigen::Index n = set.dim();
  if (A.rows() != n || A.cols() != n)
    throw input_error("make_affine: A must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  if (q.size() != n) throw input_error("make_affine: q dimension mismatch");
  auto A_p = std::make_shared<Matrix>(std::move(A));
  auto q_p = std::make_shared<Vector>(std::move(q));
  return VIProblem(
      std::move(name), std::move(set),
      [A_p, q_p](const Vector& x) -> Vector { return (*A_p) * x + (*q_p); },
      [A_p](const Vector&) -> std::optional<Matrix> { return *A_p; },
      [A_p](const Vector&) -> std::vector<Matrix> { return {*A_p}; },
      lipschitz_L);
}

VIProblem make_piecewise_affine(std::string name, ConvexSet set,
                                std::vector<AffinePiece> pieces,
                                double lipschitz_L) {
  const Eigen::Index n = set.dim();
  if (pieces.empty())
    throw input_error("make_piecewise_affine: pieces must be nonempty");
  for (size_t p = 0; p < pieces.size(); ++p) {
    const auto& piece = pieces[p];
    std::string where = "pieces[" + std::to_string(p) + "]";
    if (piece.signs.size() != static_cast<size_t>(n))
      throw input_error(where + ".signs: expected " + std::to_string(n) + " entries");
    for (int s : piece.signs)
      if (s != -1 && s != 0 && s != 1)
        throw input_error(where + ".signs: entries must be -1, 0, or +1");
    if (piece.A.rows() != n || piece.A.cols() != n)
      throw input_error(where + ".A: expected " + std::to_string(n) + "x" +
                        std::to_string(n));
    if (piece.q.size() != n)
      throw input_error(where + ".q: expected length " + std::to_string(n));
  }

  auto cell_contains = [n](const AffinePiece& piece, const Vector& x) {
    for (Eigen::Index i = 0; i < n; ++i) {
      int s = piece.signs[static_cast<size_t>(i)];
      if (s > 0 && x[i] < 0) return false;
      if (s < 0 && x[i] > 0) return false;
    }
    return true;
  };

  // Continuity on shared faces and coverage, both probed with a fixed
  // sample stream so validation is reproducible.
  std::mt19937_64 rng(0x5eed0001ULL);
  auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      for (int rep = 0; rep < 32; ++rep) {
        Vector x(n);
        for (Eigen::Index c = 0; c < n; ++c) {
          int si = pieces[i].signs[static_cast<size_t>(c)];
          int sj = pieces[j].signs[static_cast<size_t>(c)];
          double v = unit() * (rep % 2 == 0 ? 1.0 : 10.0);
          if (si * sj < 0)
            x[c] = 0.0;
          else if (si + sj > 0)
            x[c] = std::abs(v);
          else if (si + sj < 0)
            x[c] = -std::abs(v);
          else
            x[c] = v;
        }
        Vector fi = pieces[i].A * x + pieces[i].q;
        Vector fj = pieces[j].A * x + pieces[j].q;
        double scale = 1.0 + x.norm() * (pieces[i].A.norm() + pieces[j].A.norm()) +
                       pieces[i].q.norm() + pieces[j].q.norm();
        if ((fi - fj).norm() > 1e-10 * scale)
          throw input_error("pieces[" + std::to_string(i) + "] and pieces[" +
                            std::to_string(j) +
                            "] disagree on their shared face (discontinuous map)");
      }
    }
  }
  for (int rep = 0; rep < 64; ++rep) {
    Vector x(n);
    for (Eigen::Index c = 0; c < n; ++c) x[c] = unit() * (rep % 2 == 0 ? 1.0 : 10.0);
    bool covered = false;
    for (const auto& piece : pieces)
      if (cell_contains(piece, x)) covered = true;
    if (!covered)
      throw input_error("pieces: sampled point not covered by any cell");
  }

  auto pieces_p = std::make_shared<std::vector<AffinePiece>>(std::move(pieces));
  auto map_fn = [pieces_p, cell_contains](const Vector& x) -> Vector {
    for (const auto& piece : *pieces_p)
      if (cell_contains(piece, x)) return piece.A * x + piece.q;
    throw input_error("piecewise map: no piece covers the point");
  };
  auto collect = [pieces_p, cell_contains](const Vector& x) {
    std::vector<Matrix> mats;
    for (const auto& piece : *pieces_p) {
      if (!cell_contains(piece, x)) continue;
      bool dup = false;
      for (const auto& m : mats)
        if ((m - piece.A).cwiseAbs().maxCoeff() <= 1e-14) dup = true;
      if (!dup) mats.push_back(piece.A);
    }
    return mats;
  };
  auto jac_fn = [collect](const Vector& x) -> std::optional<Matrix> {
    auto mats = collect(x);
    if (mats.size() == 1) return mats.front();
    return std::nullopt;
  };
  auto bjac_fn = [collect](const Vector& x) -> std::vector<Matrix> {
    return collect(x);
  };
  return VIProblem(std::move(name), std::move(set), std::move(map_fn),
                   std::move(jac_fn), std::move(bjac_fn), lipschitz_L);
}

namespace {

double relu(double v) { return v > 0 ? v : 0.0; }

VIProblem::MapFn li_ng_map() {
  return [](const Vector& x) -> Vector {
    Vector f(2);
    f[0] = x[0] + relu(x[0]) * relu(x[1]);
    f[1] = x[1] + 1.5 * relu(x[0]);
    return f;
  };
}

// ∇F exists on {x₁<0} ∪ {x₁>0, x₂≠0}; the map is the identity on the whole
// open left half-plane.
VIProblem::JacobianFn li_ng_jacobian() {
  return [](const Vector& x) -> std::optional<Matrix> {
    if (x[0] < 0) return identity2();
    if (x[0] > 0 && x[1] > 0) {
      Matrix j(2, 2);
      j << 1.0 + x[1], x[0], 1.5, 1.0;
      return j;
    }
    if (x[0] > 0 && x[1] < 0) {
      Matrix j(2, 2);
      j << 1.0, 0.0, 1.5, 1.0;
      return j;
    }
    return std::nullopt;
  };
}

VIProblem::BJacobianFn li_ng_b_jacobian() {
  return [](const Vector& x) -> std::vector<Matrix> {
    Matrix lower(2, 2);
    lower << 1.0, 0.0, 1.5, 1.0;
    if (x[0] < 0) return {identity2()};
    if (x[0] > 0) {
      if (x[1] > 0) {
        Matrix j(2, 2);
        j << 1.0 + x[1], x[0], 1.5, 1.0;
        return {j};
      }
      if (x[1] < 0) return {lower};
      Matrix from_above(2, 2);
      from_above << 1.0, x[0], 1.5, 1.0;
      return {from_above, lower};
    }
    if (x[1] > 0) {
      Matrix from_right(2, 2);
      from_right << 1.0 + x[1], 0.0, 1.5, 1.0;
      return {identity2(), from_right};
    }
    return {identity2(), lower};
  };
}

VIProblem builtin_affine_pd() {
  Matrix A(2, 2);
  A << 2.0, 0.0, 0.0, 3.0;
  Vector q(2);
  q << -2.0, -3.0;
  VIProblem p = make_affine("affine_pd", ConvexSet::free(2), A, q, 3.0);
  Vector sol(2);
  sol << 1.0, 1.0;
  p.with_mu_star(2.0)
      .with_solutions(SolutionSet::from_points({sol}))
      .with_default_params(GapParams(1.0, 2.0));
  return p;
}

VIProblem builtin_li_ng() {
  VIProblem p("li_ng", ConvexSet::nonneg_orthant(2), li_ng_map(),
              li_ng_jacobian(), li_ng_b_jacobian(), 4.04);
  // L = 4.04 rounds up sup‖∇F‖₂ = sqrt(16.25) over [-2,2]²; descent runs
  // started in the unit ball stay inside, since ((b-a)/2)‖x‖² ≤ f_ab.
  Vector lo(2), hi(2), sol(2);
  lo << -2.0, -2.0;
  hi << 2.0, 2.0;
  sol << 0.0, 0.0;
  p.with_mu_star(1.0)
      .with_solutions(SolutionSet::from_points({sol}))
      .with_default_params(GapParams(0.5, 1.0))
      .with_lipschitz_box(lo, hi);
  return p;
}

VIProblem builtin_constant_orthant() {
  Vector q(2);
  q << 1.0, 1.0;
  auto q_p = std::make_shared<Vector>(std::move(q));
  VIProblem p(
      "constant_orthant", ConvexSet::nonneg_orthant(2),
      [q_p](const Vector&) -> Vector { return *q_p; },
      [](const Vector&) -> std::optional<Matrix> { return Matrix::Zero(2, 2); },
      [](const Vector&) -> std::vector<Matrix> { return {Matrix::Zero(2, 2)}; },
      0.0);
  Vector sol = Vector::Zero(2);
  p.with_solutions(SolutionSet::from_points({sol}))
      .with_default_params(GapParams(1.0, 2.0));
  return p;
}

VIProblem builtin_identity_free() {
  const Eigen::Index n = 3;
  VIProblem p(
      "identity_free", ConvexSet::free(n),
      [](const Vector& x) -> Vector { return x; },
      [n](const Vector&) -> std::optional<Matrix> { return Matrix::Identity(n, n); },
      [n](const Vector&) -> std::vector<Matrix> { return {Matrix::Identity(n, n)}; },
      1.0);
  p.with_mu_star(1.0)
      .with_solutions(SolutionSet::from_points({Vector::Zero(n)}))
      .with_default_params(GapParams(1.0, 2.0));
  return p;
}

}  // namespace

VIProblem builtin(const std::string& id) {
  if (id == "affine_pd") return builtin_affine_pd();
  if (id == "li_ng") return builtin_li_ng();
  if (id == "constant_orthant") return builtin_constant_orthant();
  if (id == "identity_free") return builtin_identity_free();
  throw input_error("builtin: unknown id '" + id +
                    "' (known: affine_pd, li_ng, constant_orthant, identity_free)");
}

std::vector<std::string> builtin_ids() {
  return {"affine_pd", "li_ng", "constant_orthant", "identity_free"};
}

namespace {

const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    throw input_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw input_error(path + ": missing required field '" + key + "'");
  return *it;
}

double read_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw input_error(path + ": expected a number");
  return j.get<double>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw input_error(path + ": expected a string");
  return j.get<std::string>();
}

Vector read_vector(const json& j, const std::string& path, Eigen::Index expected) {
  if (!j.is_array()) throw input_error(path + ": expected an array of numbers");
  if (expected >= 0 && static_cast<Eigen::Index>(j.size()) != expected)
    throw input_error(path + ": expected length " + std::to_string(expected) +
                      ", got " + std::to_string(j.size()));
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = read_number(j[static_cast<size_t>(i)],
                       path + "[" + std::to_string(i) + "]");
  return v;
}

// Box bounds: null means unbounded on that side.
Vector read_bound(const json& j, const std::string& path, Eigen::Index expected,
                  double missing) {
  if (!j.is_array()) throw input_error(path + ": expected an array");
  if (static_cast<Eigen::Index>(j.size()) != expected)
    throw input_error(path + ": expected length " + std::to_string(expected));
  Vector v(expected);
  for (Eigen::Index i = 0; i < expected; ++i) {
    const json& e = j[static_cast<size_t>(i)];
    v[i] = e.is_null() ? missing
                       : read_number(e, path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Matrix read_matrix(const json& j, const std::string& path, Eigen::Index rows,
                   Eigen::Index cols) {
  if (!j.is_array()) throw input_error(path + ": expected a row-major list of rows");
  if (static_cast<Eigen::Index>(j.size()) != rows)
    throw input_error(path + ": expected " + std::to_string(rows) + " rows, got " +
                      std::to_string(j.size()));
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    Vector row = read_vector(j[static_cast<size_t>(r)],
                             path + "[" + std::to_string(r) + "]", cols);
    m.row(r) = row.transpose();
  }
  return m;
}

ConvexSet read_set(const json& j, Eigen::Index dim) {
  std::string kind = read_string(require_field(j, "kind", "set"), "set.kind");
  if (kind == "free") return ConvexSet::free(dim);
  if (kind == "nonneg_orthant") return ConvexSet::nonneg_orthant(dim);
  if (kind == "box")
    return ConvexSet::box(read_bound(require_field(j, "lo", "set"), "set.lo", dim, -kInf),
                          read_bound(require_field(j, "hi", "set"), "set.hi", dim, kInf));
  if (kind == "ball")
    return ConvexSet::ball(
        read_vector(require_field(j, "center", "set"), "set.center", dim),
        read_number(require_field(j, "radius", "set"), "set.radius"));
  throw input_error("set.kind: unknown kind '" + kind +
                    "' (known: free, nonneg_orthant, box, ball)");
}

int read_sign(const json& j, const std::string& path) {
  std::string s = read_string(j, path);
  if (s == "+") return 1;
  if (s == "-") return -1;
  if (s == "*") return 0;
  throw input_error(path + ": expected '+', '-', or '*'");
}

}  // namespace

VIProblem parse_problem(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded())
    throw input_error("problem file: not valid JSON");

  std::string schema = read_string(require_field(j, "schema", "problem"), "schema");
  if (schema != "dgap-vi/1")
    throw input_error("schema: expected 'dgap-vi/1', got '" + schema + "'");

  std::string name = read_string(require_field(j, "name", "problem"), "name");
  double dim_raw = read_number(require_field(j, "dim", "problem"), "dim");
  auto dim = static_cast<Eigen::Index>(dim_raw);
  if (dim < 1 || static_cast<double>(dim) != dim_raw)
    throw input_error("dim: expected a positive integer");

  ConvexSet set = read_set(require_field(j, "set", "problem"), dim);
  double L = read_number(require_field(j, "lipschitz_L", "problem"), "lipschitz_L");
  if (!(L >= 0)) throw input_error("lipschitz_L: must be >= 0");

  const json& map_j = require_field(j, "map", "problem");
  std::string type = read_string(require_field(map_j, "type", "map"), "map.type");
  std::optional<VIProblem> problem;
  if (type == "affine") {
    Matrix A = read_matrix(require_field(map_j, "A", "map"), "map.A", dim, dim);
    Vector q = read_vector(require_field(map_j, "q", "map"), "map.q", dim);
    problem = make_affine(name, set, std::move(A), std::move(q), L);
  } else if (type == "piecewise_affine") {
    const json& pieces_j = require_field(map_j, "pieces", "map");
    if (!pieces_j.is_array() || pieces_j.empty())
      throw input_error("map.pieces: expected a nonempty array");
    std::vector<AffinePiece> pieces;
    for (size_t p = 0; p < pieces_j.size(); ++p) {
      std::string path = "map.pieces[" + std::to_string(p) + "]";
      const json& pj = pieces_j[p];
      AffinePiece piece;
      const json& signs = require_field(pj, "signs", path);
      if (!signs.is_array() || static_cast<Eigen::Index>(signs.size()) != dim)
        throw input_error(path + ".signs: expected " + std::to_string(dim) +
                          " entries");
      for (size_t c = 0; c < signs.size(); ++c)
        piece.signs.push_back(
            read_sign(signs[c], path + ".signs[" + std::to_string(c) + "]"));
      piece.A = read_matrix(require_field(pj, "A", path), path + ".A", dim, dim);
      piece.q = read_vector(require_field(pj, "q", path), path + ".q", dim);
      pieces.push_back(std::move(piece));
    }
    problem = make_piecewise_affine(name, set, std::move(pieces), L);
  } else if (type == "builtin") {
    std::string id = read_string(require_field(map_j, "id", "map"), "map.id");
    if (id != "li_ng")
      throw input_error("map.id: unknown builtin map '" + id +
                        "' (known: li_ng; affine builtins use type 'affine')");
    if (dim != 2) throw input_error("dim: builtin map li_ng requires dim 2");
    problem = VIProblem(name, set, li_ng_map(), li_ng_jacobian(),
                        li_ng_b_jacobian(), L);
  } else {
    throw input_error("map.type: unknown type '" + type +
                      "' (known: affine, piecewise_affine, builtin)");
  }

  if (j.contains("mu_star")) {
    double mu = read_number(j["mu_star"], "mu_star");
    if (!(mu > 0)) throw input_error("mu_star: must be positive");
    problem->with_mu_star(mu);
  }
  if (j.contains("solutions")) {
    const json& s = j["solutions"];
    if (s.contains("points")) {
      const json& pts = s["points"];
      if (!pts.is_array() || pts.empty())
        throw input_error("solutions.points: expected a nonempty array");
      std::vector<Vector> points;
      for (size_t i = 0; i < pts.size(); ++i)
        points.push_back(read_vector(
            pts[i], "solutions.points[" + std::to_string(i) + "]", dim));
      problem->with_solutions(SolutionSet::from_points(std::move(points)));
    } else if (s.contains("affine_set")) {
      const json& a = s["affine_set"];
      Vector offset = read_vector(require_field(a, "offset", "solutions.affine_set"),
                                  "solutions.affine_set.offset", dim);
      const json& basis_j = require_field(a, "basis", "solutions.affine_set");
      if (!basis_j.is_array())
        throw input_error("solutions.affine_set.basis: expected a list of vectors");
      Matrix basis(dim, static_cast<Eigen::Index>(basis_j.size()));
      for (size_t c = 0; c < basis_j.size(); ++c)
        basis.col(static_cast<Eigen::Index>(c)) = read_vector(
            basis_j[c], "solutions.affine_set.basis[" + std::to_string(c) + "]", dim);
      problem->with_solutions(SolutionSet::from_affine(std::move(offset), std::move(basis)));
    } else {
      throw input_error("solutions: expected 'points' or 'affine_set'");
    }
  }
  if (j.contains("params")) {
    const json& p = j["params"];
    double a = read_number(require_field(p, "a", "params"), "params.a");
    double b = read_number(require_field(p, "b", "params"), "params.b");
    if (!(a > 0) || !(a < b))
      throw input_error("params: require 0 < a < b (got a=" + std::to_string(a) +
                        ", b=" + std::to_string(b) + ")");
    problem->with_default_params(GapParams(a, b));
  }
  if (j.contains("lipschitz_box")) {
    const json& lb = j["lipschitz_box"];
    problem->with_lipschitz_box(
        read_bound(require_field(lb, "lo", "lipschitz_box"), "lipschitz_box.lo",
                   dim, -kInf),
        read_bound(require_field(lb, "hi", "lipschitz_box"), "lipschitz_box.hi",
                   dim, kInf));
  }
  return std::move(*problem);
}

VIProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("load_problem: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

double distance_to_solutions(const VIProblem& problem, const Vector& x) {
  if (!problem.solutions())
    throw capability_error("distance_to_solutions: problem has no recorded solution set");
  return problem.solutions()->distance(x);
}

std::uint64_t fingerprint(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace dgap
