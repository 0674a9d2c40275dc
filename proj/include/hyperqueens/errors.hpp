#pragma once

#include <stdexcept>

namespace hyperqueens {

// Malformed input: bad dimension, out-of-range coordinate, mismatched lengths.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact integer quantity does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// The board (or a table derived from it) exceeds a configured size cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperqueens
