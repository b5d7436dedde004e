#pragma once

#include <stdexcept>
#include <string>

namespace bracketkit {

/// Malformed or out-of-domain input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside the open interval a construction is defined on.
class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

/// Point configuration violates general position.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction broke one of its own guarantees. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bracketkit
