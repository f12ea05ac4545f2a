#pragma once

#include <stdexcept>
#include <string>

namespace tiltwall {

/// Malformed textual input (class strings, rationals, space tags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of a mathematical operation was violated: wrong ambient
/// space, lattice failure, unsupported class shape, infinite search request.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tiltwall
