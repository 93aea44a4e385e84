#pragma once

#include <stdexcept>
#include <string>

namespace monodyn {

// Input-validation failures use the standard exception types:
//   std::domain_error   argument outside the mathematical domain
//   std::out_of_range   value or intermediate too large for 63-bit arithmetic
// The two types below cover the remaining cases.

/// A desk-scale cap (field size, sieve bound, series length) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monodyn
