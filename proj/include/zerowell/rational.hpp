#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace zerowell {

/// Exact fraction with 64-bit components, always kept in lowest terms with a
/// positive denominator. Every operation computes in 128-bit intermediates and
/// throws OverflowError if the reduced result does not fit; nothing wraps.
///
/// Components are restricted to [-(2^63 - 1), 2^63 - 1] so negation is total.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  double to_double() const noexcept;

  /// Canonical text: "p" for integers, otherwise "p/q".
  std::string to_string() const;
  /// Accepts only canonical text (see to_string); throws ParseError otherwise.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace zerowell
