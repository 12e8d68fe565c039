// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#include "dgap/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dgap {

namespace {

using nlohmann::json;

json region_to_json(const Region& region) {
  json r;
  if (region.shape == Region::Shape::Ball) {
    r["shape"] = "ball";
    r["center"] = std::vector<double>(region.center.begin(), region.center.end());
    r["radius"] = region.radius;
  } else {
    r["shape"] = "box";
    r["lo"] = std::vector<double>(region.lo.begin(), region.lo.end());
    r["hi"] = std::vector<double>(region.hi.begin(), region.hi.end());
  }
  return r;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[v & 0xf];
    v >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc())
    throw input_error("format_double: value does not fit the buffer");
  return std::string(buf, ptr);
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "iter,fab,norm_u,norm_w,dir,m,t,decrease,subgrad_dist\n";
  for (const auto& r : traj.records) {
    os << r.n << ',' << format_double(r.fab) << ',' << format_double(r.norm_u)
       << ',' << format_double(r.norm_w) << ',' << to_string(r.dir) << ','
       << r.m << ',' << format_double(r.t) << ',' << format_double(r.decrease)
       << ',' << format_double(r.subgrad_dist) << '\n';
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& rep) {
  json j;
  j["kind"] = rep.kind;
  j["n_samples"] = rep.n_samples;
  j["n_active"] = rep.n_active;
  j["min_ratio"] = std::isnan(rep.min_ratio) ? json(nullptr) : json(rep.min_ratio);
  j["theoretical_bound"] =
      rep.theoretical_bound ? json(*rep.theoretical_bound) : json(nullptr);
  j["pass"] = rep.pass;
  j["seed"] = rep.seed;
  j["region"] = region_to_json(rep.region);
  return j.dump(2) + "\n";
}

std::string diagnostics_to_json(const DiagnosticsReport& rep) {
  json j;
  j["m1"] = rep.m1;
  j["m2"] = rep.m2;
  j["t_star"] = rep.t_star;
  j["eta"] = rep.eta;
  j["max_q_ratio"] = rep.max_q_ratio;
  j["all_pass"] = rep.all_pass;
  j["n_iterations"] = rep.iterations.size();
  json arr = json::array();
  for (const auto& it : rep.iterations) {
    arr.push_back({{"n", it.n},
                   {"sufficient_decrease_ok", it.sufficient_decrease_ok},
                   {"relative_error_ok", it.relative_error_ok},
                   {"q_ratio", it.q_ratio},
                   {"q_ratio_ok", it.q_ratio_ok}});
  }
  j["iterations"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["tool"] = kToolVersion;
  j["command"] = m.command_line;
  j["problem"] = {{"name", m.problem_name},
                  {"fingerprint", "fnv1a64:" + hex64(m.problem_fingerprint)}};
  j["seed"] = m.seed;
  json cfg = json::parse(m.config_json, nullptr, false);
  j["config"] = cfg.is_discarded() ? json(m.config_json) : cfg;
  j["artifact"] = m.artifact;
  j["wall_time_s"] = m.wall_time_s;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("write_file: cannot open '" + path + "'");
  out << content;
  if (!out) throw input_error("write_file: failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("read_file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace dgap
