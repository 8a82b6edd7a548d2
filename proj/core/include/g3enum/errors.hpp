#pragma once

#include <stdexcept>
#include <string>

namespace g3enum {

/// A precondition on an operation's arguments failed (e.g. degree out of range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query or input file is malformed.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed: two routes disagree, a count that
/// must be an integer is not, or a memo key was rebound to a different value.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace g3enum
