#include "crossforge/exact.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace crossforge {

namespace mp = boost::multiprecision;

ExactValue::ExactValue(std::int64_t value) : value_(value) {}

ExactValue::ExactValue(BigInt value) : value_(std::move(value)) {}

ExactValue ExactValue::fraction(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::domain_error("ExactValue: zero denominator");
  }
  ExactValue out;
  // cpp_rational rejects negative denominators; move the sign up.
  out.value_ = denominator < 0 ? mp::cpp_rational(-numerator, -denominator) : mp::cpp_rational(numerator, denominator);
  return out;
}

BigInt ExactValue::numerator() const { return mp::numerator(value_); }

BigInt ExactValue::denominator() const { return mp::denominator(value_); }

bool ExactValue::is_integer() const { return mp::denominator(value_) == 1; }

int ExactValue::sign() const { return value_.sign(); }

BigInt ExactValue::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("ExactValue: " + to_string() + " is not an integer");
  }
  return mp::numerator(value_);
}

std::int64_t ExactValue::to_int64() const {
  const BigInt v = to_integer();
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("ExactValue: " + to_string() + " does not fit in int64");
  }
  return v.convert_to<std::int64_t>();
}

double ExactValue::to_double() const { return value_.convert_to<double>(); }

std::string ExactValue::to_string() const {
  if (is_integer()) {
    return mp::numerator(value_).str();
  }
  return mp::numerator(value_).str() + "/" + mp::denominator(value_).str();
}

std::string ExactValue::to_decimal(int digits) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  const BigInt num = mp::numerator(value_);
  const BigInt den = mp::denominator(value_);
  BigInt scaled = abs(num) * scale * 2 + den;  // round half away from zero
  scaled /= den * 2;
  const BigInt whole = scaled / scale;
  const BigInt frac = scaled % scale;
  std::string out = (num < 0 && scaled != 0) ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

ExactValue ExactValue::clamped_non_negative() const {
  return sign() < 0 ? ExactValue{} : *this;
}

ExactValue& ExactValue::operator+=(const ExactValue& other) {
  value_ += other.value_;
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& other) {
  value_ -= other.value_;
  return *this;
}

ExactValue& ExactValue::operator*=(const ExactValue& other) {
  value_ *= other.value_;
  return *this;
}

ExactValue& ExactValue::operator/=(const ExactValue& other) {
  if (other.value_ == 0) {
    throw std::domain_error("ExactValue: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

ExactValue ExactValue::operator-() const {
  ExactValue out = *this;
  out.value_ = -out.value_;
  return out;
}

std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactValue& value) {
  return os << value.to_string();
}

ExactValue parse_exact(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      return ExactValue(BigInt(text));
    }
    return ExactValue::fraction(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not an exact value: '" + text + "'");
  }
}

}  // namespace crossforge
