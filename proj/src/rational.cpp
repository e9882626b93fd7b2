#include "mcsp/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mcsp {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));

  bool negative = !text.empty() && text[0] == '-';
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (negative) int_part.remove_prefix(1);
  if (frac_part.empty() && int_part.empty()) throw std::invalid_argument("not a rational number");
  if (frac_part.size() > 17) throw std::invalid_argument("too many decimal digits");

  i128 num = int_part.empty() ? 0 : parse_int(int_part, text);
  i128 den = 1;
  for (char c : frac_part) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return make(negative ? -num : num, den);
}

std::string Rational::to_string() const {
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

  int digits = std::max(twos, fives);
  if (digits == 0) return std::to_string(num_);
  i128 scaled = static_cast<i128>(num_ < 0 ? -num_ : num_);
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  scaled = scaled * scale / den_;
  i128 ip = scaled / scale;
  i128 fp = scaled % scale;
  std::string frac(digits, '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac[i] = static_cast<char>('0' + static_cast<int>(fp % 10));
    fp /= 10;
  }
  return (num_ < 0 ? "-" : "") + std::to_string(static_cast<std::int64_t>(ip)) + "." + frac;
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
              static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
              static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  return l < r ? -1 : (l > r ? 1 : 0);
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

int compare_scaled(const Rational& q, std::int64_t a, std::int64_t b) {
  i128 l = static_cast<i128>(q.num()) * a;
  i128 r = static_cast<i128>(b) * q.den();
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace mcsp
