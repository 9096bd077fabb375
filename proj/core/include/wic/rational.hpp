#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wic {

/// Exact rational number with 64-bit components, always in lowest terms with
/// a positive denominator. Every operation is overflow-checked and throws
/// OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer not above the value.
  std::int64_t floor() const;
  /// Smallest integer not below the value.
  std::int64_t ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", or just "num" when the value is an integer.
  std::string to_string() const;
  /// Always "num/den".
  std::string to_fraction_string() const;

  /// Accepts "a/b", "a" and decimals such as "0.75". Throws std::invalid_argument
  /// on malformed text and OverflowError when a component does not fit.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// max{s >= 0 : s*s <= q} for a nonnegative rational q.
std::int64_t isqrt_floor(const Rational& q);

/// A graph weight: an exact rational constrained to [0, 1].
class Weight {
 public:
  constexpr Weight() = default;
  /// Throws PreconditionError when the value is outside [0, 1].
  explicit Weight(const Rational& value);
  Weight(std::int64_t num, std::int64_t den) : Weight(Rational(num, den)) {}

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.value_ <=> b.value_;
  }

  static bool in_range(const Rational& value);

 private:
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Largest m >= 0 with m*w < 1, for w > 0. Exact replacement for the
/// floor((1 - eps) / w) terms of the degree-based bounds.
std::int64_t cap(const Weight& w);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace wic
