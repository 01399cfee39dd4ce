#pragma once

#include <stdexcept>
#include <string>

namespace qkc {

/// Unsupported family/rank, malformed space description, dimension bound exceeded.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. a mutation that would
/// break downward closure, or a skew pair that is not nested).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Indicates a bug or a wrong table entry.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qkc
