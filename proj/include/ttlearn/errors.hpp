#pragma once

#include <stdexcept>
#include <string>

namespace ttlearn {

// Incompatible extents or malformed index arguments.
struct shape_error : std::invalid_argument {
  explicit shape_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request would materialize an exponentially large object.
struct capacity_error : std::length_error {
  explicit capacity_error(const std::string& msg) : std::length_error(msg) {}
};

// A numerical contract was violated (non-convergence, broken positivity, ...).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ttlearn
