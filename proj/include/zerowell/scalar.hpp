#pragma once

#include <compare>
#include <string>
#include <variant>

#include "zerowell/rational.hpp"

namespace zerowell {

/// A number that is either an exact Rational or a binary double. Arithmetic
/// between two exact values stays exact; anything touching a double yields a
/// double.
///
/// operator== is data equality: same mode and same value, so the exact 1 and
/// the double 1.0 are different Scalars. Use numerically_equal or the ordering
/// operators for value comparisons across modes.
class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational r) : value_(r) {}                 // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t n) : value_(Rational(n)) {}   // NOLINT(google-explicit-constructor)
  Scalar(int n) : value_(Rational(n)) {}            // NOLINT(google-explicit-constructor)
  Scalar(double d) : value_(d) {}                   // NOLINT(google-explicit-constructor)

  static Scalar ratio(std::int64_t num, std::int64_t den) { return Scalar(Rational(num, den)); }

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;  // throws DomainError when in float mode
  double to_double() const noexcept;
  Scalar to_float() const { return Scalar(to_double()); }

  bool is_zero() const noexcept;
  int sign() const noexcept;

  Scalar operator-() const;
  Scalar abs() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Human-readable form: "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

bool numerically_equal(const Scalar& a, const Scalar& b);

Scalar sqrt(const Scalar& s);  // always float mode

}  // namespace zerowell
