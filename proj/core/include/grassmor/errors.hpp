#pragma once

#include <stdexcept>
#include <string>

namespace grassmor {

// Bad user-supplied data: unsorted/negative parts, mismatched degrees, ranks
// out of range. The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ShapeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Raised by the back-substitution solver when an unknown would be fixed twice.
// This can only happen if the exact sequence was not produced by the
// construction in construction.hpp.
class SolverConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grassmor
