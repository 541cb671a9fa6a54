#pragma once

#include <stdexcept>
#include <string>

namespace qrat {

/// Input outside the mathematical domain of an operation (e.g. r/s <= 1
/// passed to an expansion, non-neighbours passed to a mediant).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Brute-force enumeration refused because the input is too large.
/// Callers can fall back to the polynomial engines.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input (fractions, coefficient lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qrat
