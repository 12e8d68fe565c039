// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dgap {

// Caller handed us something malformed: bad dimensions, parameters outside
// their admissible range, unparseable input files.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// The request is well-formed but outside what this build can answer, e.g.
// tangent-cone queries on non-polyhedral sets or exact subderivatives at
// points where the map is not differentiable.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dgap
