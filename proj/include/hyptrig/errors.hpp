#pragma once

#include <stdexcept>
#include <string>

namespace hyptrig {

/// Raised when an argument lies outside an operation's validity domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for an unknown catalog entry id.
class lookup_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A series that the caller asked to sum does not converge (e.g. ratio >= 1
/// without alternation).
class divergent_series_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace hyptrig
