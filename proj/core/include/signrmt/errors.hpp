#pragma once

#include <stdexcept>
#include <string>

namespace signrmt {

/// Precondition violation: bad sizes, out-of-range parameters, enumeration
/// cap exceeded.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but no formula or predictor exists for it.
class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A hypergeometric lower parameter sits on a pole (nonpositive integer).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace signrmt
