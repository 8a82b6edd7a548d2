#pragma once

#include <string>
#include <string_view>

#include "g3enum/errors.hpp"
#include "g3enum/exact.hpp"

namespace g3enum {

inline const ExactScalar& require_integer(std::string_view what, const ExactScalar& value) {
  if (!value.is_integer()) {
    throw ConsistencyError(std::string(what) + " is not an integer: " + value.str());
  }
  return value;
}

/// Enumerative counts must be non-negative integers.
inline const ExactScalar& require_count(std::string_view what, const ExactScalar& value) {
  require_integer(what, value);
  if (value.sign() < 0) throw ConsistencyError(std::string(what) + " is negative: " + value.str());
  return value;
}

inline void require_equal(std::string_view what, const ExactScalar& lhs, const ExactScalar& rhs) {
  if (lhs != rhs) {
    throw ConsistencyError(std::string(what) + ": " + lhs.str() + " != " + rhs.str());
  }
}

}  // namespace g3enum
