#pragma once

#include <stdexcept>

namespace envlat {

// Bad argument or malformed input (CLI exit code 1).
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Refusal to start a computation that exceeds a configured resource cap
// (CLI exit code 3).
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace envlat
