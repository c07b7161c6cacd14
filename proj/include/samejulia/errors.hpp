#pragma once

#include <stdexcept>
#include <string>

namespace samejulia {

/// Rejected input: precondition violated, malformed data. Maps to CLI exit 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation left its numeric validity range (non-finite values,
/// residual above tolerance). Maps to CLI exit 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace samejulia
