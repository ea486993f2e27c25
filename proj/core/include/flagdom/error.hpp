#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagdom {

/// Invalid sizes, mismatched dimensions, malformed specs.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that is well formed but lies outside the root system in use.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant failed. Unreachable for valid inputs.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation was called outside the configurations it is defined for.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what_arg, std::uint64_t cap)
      : std::runtime_error(what_arg + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace flagdom
