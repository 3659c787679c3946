#include "zerowell/scalar.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include "zerowell/errors.hpp"

namespace zerowell {

const Rational& Scalar::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw DomainError("scalar is in float mode, exact value requested");
}

double Scalar::to_double() const noexcept {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_double();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const noexcept { return sign() == 0; }

int Scalar::sign() const noexcept {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  const double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-exact());
  return Scalar(-std::get<double>(value_));
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

namespace {

template <class ExactOp, class FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, FloatOp float_op) {
  if (a.is_exact() && b.is_exact()) return Scalar(exact_op(a.exact(), b.exact()));
  return Scalar(float_op(a.to_double(), b.to_double()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::plus<Rational>(), std::plus<double>());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::minus<Rational>(), std::minus<double>());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::multiplies<Rational>(), std::multiplies<double>());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::divides<Rational>(), std::divides<double>());
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() <=> b.exact();
  return a.to_double() <=> b.to_double();
}

std::string Scalar::to_string() const {
  if (is_exact()) return exact().to_string();
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, res.ptr);
}

bool numerically_equal(const Scalar& a, const Scalar& b) { return (a <=> b) == 0; }

Scalar sqrt(const Scalar& s) { return Scalar(std::sqrt(s.to_double())); }

}  // namespace zerowell
