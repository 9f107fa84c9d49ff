#pragma once

#include <stdexcept>
#include <string>

namespace consensus_lab {

// Bad arguments (out-of-range node, empty set, dimension mismatch) are
// reported with std::invalid_argument; headings outside the chart domain with
// std::domain_error. The types below cover the remaining failure classes.

/// A query that is well-formed but not decidable for the given schedule kind,
/// e.g. an unbounded union over a schedule with no period.
class UnsupportedQuery : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive computation refused because its input is too large.
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A generator could not produce output satisfying its own contract.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace consensus_lab
