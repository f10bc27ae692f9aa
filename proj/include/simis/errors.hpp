#pragma once

#include <stdexcept>
#include <string>

namespace simis {

/// Operands live in rings (or vertex sets) of different sizes.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument violates an operation's precondition.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A brute-force search would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An exponent would not fit in the machine-width exponent type.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace simis
