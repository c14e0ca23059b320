#pragma once

#include <stdexcept>
#include <string>

namespace qstirling {

// Thrown when an enumeration or identity check would exceed the configured
// size guard (multiset total M, or the equivalent for partitions).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an argument violates the documented precondition of an
// operation (malformed multiset, non-quasi-Stirling word, bad root, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal invariant broken; indicates a bug rather than bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qstirling
