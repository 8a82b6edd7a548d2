#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>

namespace g3enum {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Every invariant in the engine is carried in this type.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactScalar(std::int64_t numerator, std::int64_t denominator);
  explicit ExactScalar(mpq_class value);
  explicit ExactScalar(const mpz_class& value);

  /// Parses "p" or "p/q" (decimal, optional leading '-').
  static ExactScalar parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  bool is_integer() const;
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other);
  ExactScalar& operator/=(const ExactScalar& other);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& lhs, const ExactScalar& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& out, const ExactScalar& x);

 private:
  mpq_class value_{0};
};

/// Binomial coefficient C(n, k); zero when k < 0 or k > n or n < 0.
ExactScalar binomial(std::int64_t n, std::int64_t k);

/// n! / (k_1! k_2! ... ); zero if any part is negative or the parts do not sum to n.
ExactScalar multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts);

/// x^e for e >= 0.
ExactScalar power(const ExactScalar& x, unsigned e);

}  // namespace g3enum
