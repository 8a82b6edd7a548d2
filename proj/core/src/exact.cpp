#include "g3enum/exact.hpp"

#include <ostream>

#include "g3enum/errors.hpp"

namespace g3enum {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class(long) is 64-bit on LP64, but go through a string to stay portable.
  return mpz_class(std::to_string(v));
}

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

ExactScalar::ExactScalar(std::int64_t value) : value_(to_mpz(value)) {}

ExactScalar::ExactScalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("ExactScalar: zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

ExactScalar::ExactScalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactScalar::ExactScalar(const mpz_class& value) : value_(value) {}

ExactScalar ExactScalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ValidationError("not an exact rational: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  const mpz_class d{std::string(den)};
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return ExactScalar(mpq_class(mpz_class(n), d));
}

std::string ExactScalar::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool ExactScalar::is_integer() const { return value_.get_den() == 1; }

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  value_ += other.value_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  value_ -= other.value_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& other) {
  value_ *= other.value_;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& other) {
  if (other.is_zero()) throw DomainError("ExactScalar: division by zero");
  value_ /= other.value_;
  return *this;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& out, const ExactScalar& x) { return out << x.str(); }

ExactScalar binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactScalar(r);
}

ExactScalar multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts) {
  std::int64_t remaining = n;
  ExactScalar result = 1;
  for (const auto p : parts) {
    if (p < 0 || p > remaining) return 0;
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return remaining == 0 ? result : ExactScalar(0);
}

ExactScalar power(const ExactScalar& x, unsigned e) {
  ExactScalar r = 1;
  for (unsigned k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace g3enum
