#pragma once

#include <stdexcept>
#include <string>

namespace clusteraut {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input supplied by a caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A bounded search (exchange graph, mutation class, belt walk) hit its cap.
/// Usually means the input is not of finite type.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: a computed object violates a
/// property that holds for every valid input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clusteraut
