#pragma once

#include <stdexcept>
#include <string>

namespace artlab {

/// Malformed or out-of-contract input. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (closure size, point count, prime bound) was exceeded.
/// Maps to CLI exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace artlab
