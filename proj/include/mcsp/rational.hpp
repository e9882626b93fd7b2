#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mcsp {

// Exact non-overflowing-in-practice rational number with a positive
// denominator, always kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Accepts "3", "-2", "0.25", "1/4", ".5".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Terminating decimal when the denominator has only factors 2 and 5,
  // otherwise "p/q".
  std::string to_string() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  static int compare(const Rational& a, const Rational& b);

  // floor(*this), ceil(*this)
  std::int64_t floor() const;
  std::int64_t ceil() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Compares count * q against a count, exactly: returns sign(lhs - rhs) for
// lhs = q * a, rhs = b.
int compare_scaled(const Rational& q, std::int64_t a, std::int64_t b);

}  // namespace mcsp
