#pragma once

#include <stdexcept>
#include <string>

namespace homsim {

// Bad user-facing parameters (config files, CLI arguments, width specs).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical preconditions violated or computations that cannot proceed
// (under-resolved grids, non-converging fits, inconsistent width triples).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File system / CSV / JSON problems.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace homsim
