// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string>

#include "dgap/solver.hpp"
#include "dgap/verify.hpp"

namespace dgap {

inline constexpr const char* kToolVersion = "dgap 0.1.0";

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// Header "iter,fab,norm_u,norm_w,dir,m,t,decrease,subgrad_dist", one row per
// completed iteration; a run that starts at a solution emits the header only.
std::string trajectory_to_csv(const Trajectory& traj);

// Stable field names {kind, n_samples, n_active, min_ratio,
// theoretical_bound, pass, seed, region}; absent bounds and undefined
// ratios serialize as null.
std::string report_to_json(const VerificationReport& rep);

std::string diagnostics_to_json(const DiagnosticsReport& rep);

// Provenance stamp written as a <artifact>.manifest.json sidecar so the
// artifact bodies themselves stay byte-identical across reruns (wall time
// lives only here). config_json carries the resolved run configuration as a
// serialized JSON object.
struct RunManifest {
  std::string command_line;
  std::string problem_name;
  std::uint64_t problem_fingerprint = 0;
  std::uint64_t seed = 0;
  std::string config_json = "{}";
  std::string artifact;
  double wall_time_s = 0;
};

std::string manifest_to_json(const RunManifest& m);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace dgap
