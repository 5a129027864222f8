#pragma once

#include <stdexcept>

namespace polypart {

/// Bad user input or a violated hypothesis on f / (a, k, delta).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not produce a result (e.g. no sign change).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polypart
