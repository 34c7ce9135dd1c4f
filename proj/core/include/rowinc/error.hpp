#pragma once

#include <stdexcept>
#include <string>

namespace rowinc {

// Malformed or invariant-violating input (bad rows, bad word, bad flags).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well formed but outside the domain of a map (e.g. f on a tableau
// with no equal column, g on a non-prime tableau).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Polynomial division left a nonzero remainder.
class DivisibilityError : public std::runtime_error {
 public:
  explicit DivisibilityError(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the range of the coefficient type.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace rowinc
