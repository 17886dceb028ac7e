#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossforge {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical reduced form with a positive denominator.
///
/// Every closed-form count and bound is evaluated in this type. Counts carry
/// denominator 1; relaxed bounds (e.g. the n = 3 cycle bound) are genuine
/// fractions.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactValue(BigInt value);        // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when denominator is zero.
  static ExactValue fraction(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const;
  int sign() const;

  /// Integer value; throws std::domain_error if not integral.
  BigInt to_integer() const;
  /// Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  double to_double() const;

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;
  /// Fixed-point decimal rendering with the given number of digits.
  std::string to_decimal(int digits) const;

  ExactValue clamped_non_negative() const;

  ExactValue& operator+=(const ExactValue& other);
  ExactValue& operator-=(const ExactValue& other);
  ExactValue& operator*=(const ExactValue& other);
  ExactValue& operator/=(const ExactValue& other);

  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
  ExactValue operator-() const;

  friend bool operator==(const ExactValue& a, const ExactValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b);

 private:
  boost::multiprecision::cpp_rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactValue& value);

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
ExactValue parse_exact(const std::string& text);

/// Binomial coefficient C(m, 2).
inline std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

/// (-1)^k for any integer k.
inline int minus_one_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// (1 - (-1)^k) / 2, i.e. k mod 2 as 0/1 for any integer k.
inline int parity(std::int64_t k) { return (k % 2 == 0) ? 0 : 1; }

}  // namespace crossforge
