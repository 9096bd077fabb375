#include "wic/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "wic/errors.hpp"

namespace wic {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational overflow in addition");
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("rational overflow in subtraction");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational overflow in multiplication");
  return out;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return mul(a / std::gcd(a, b), b);
}

}  // namespace checked

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = checked::sub(0, num);
    den = checked::sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
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

Rational& Rational::operator+=(const Rational& rhs) {
  // a/b + c/d = (a*(d/g) + c*(b/g)) / (b/g*d), g = gcd(b, d)
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t left = checked::mul(num_, rhs.den_ / g);
  const std::int64_t right = checked::mul(rhs.num_, den_ / g);
  *this = Rational(checked::add(left, right), checked::mul(den_ / g, rhs.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  return *this += Rational(checked::sub(0, rhs.num_), rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t a = g1 == 0 ? 0 : num_ / g1;
  const std::int64_t d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
  const std::int64_t c = g2 == 0 ? 0 : rhs.num_ / g2;
  const std::int64_t b = g2 == 0 ? den_ : den_ / g2;
  *this = Rational(checked::mul(a, c), checked::mul(b, d));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return to_fraction_string();
}

std::string Rational::to_fraction_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw OverflowError("number out of 64-bit range: " + std::string(text));
  if (ec != std::errc() || ptr != last) throw std::invalid_argument("not a number: " + std::string(text));
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() && whole.empty()) throw std::invalid_argument("not a number: " + std::string(text));
    for (char ch : frac) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("not a number: " + std::string(text));
    }
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den = checked::mul(den, 10);
    const std::int64_t int_part = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t frac_part = frac.empty() ? 0 : parse_int(frac);
    std::int64_t num = checked::add(checked::mul(int_part, den), frac_part);
    if (negative) num = -num;
    return Rational(num, den);
  }
  return Rational(parse_int(text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t isqrt_floor(const Rational& q) {
  if (q < 0) throw std::domain_error("isqrt_floor of a negative rational");
  // s*s <= p/q  <=>  s*s*q <= p; bisection on s.
  const __int128 p = q.num();
  const __int128 d = q.den();
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (static_cast<__int128>(hi) * hi * d <= p) hi *= 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (static_cast<__int128>(mid) * mid * d <= p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool Weight::in_range(const Rational& value) { return value >= 0 && value <= 1; }

Weight::Weight(const Rational& value) : value_(value) {
  if (!in_range(value)) throw PreconditionError("weight " + value.to_string() + " outside [0, 1]");
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.value(); }

std::int64_t cap(const Weight& w) {
  if (w.is_zero()) throw PreconditionError("cap() of a zero weight is unbounded");
  // m*w < 1  <=>  m*num < den  <=>  m <= (den - 1) / num
  return (w.value().den() - 1) / w.value().num();
}

}  // namespace wic
