#pragma once

#include <stdexcept>
#include <string>

namespace sniff {

/// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; the message carries the path and location.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace sniff
