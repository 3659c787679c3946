#include "zerowell/rational.hpp"

#include <charconv>
#include <limits>

#include "zerowell/errors.hpp"

namespace zerowell {

namespace {

using wide = __int128;
using uwide = unsigned __int128;

constexpr std::int64_t kComponentMax = std::numeric_limits<std::int64_t>::max();

uwide magnitude(wide v) { return v < 0 ? uwide(0) - uwide(v) : uwide(v); }

uwide gcd(uwide a, uwide b) {
  while (b != 0) {
    const uwide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

wide checked_mul(wide a, wide b) {
  wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational overflow in multiplication");
  return out;
}

wide checked_add(wide a, wide b) {
  wide out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational overflow in addition");
  return out;
}

// Parses an optionally signed decimal integer with no leading zeros.
bool parse_component(std::string_view text, bool allow_sign, std::int64_t& out) {
  if (text.empty()) return false;
  std::string_view digits = text;
  if (digits.front() == '-') {
    if (!allow_sign) return false;
    digits.remove_prefix(1);
  }
  if (digits.empty()) return false;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') return false;
  }
  if (digits.size() > 1 && digits.front() == '0') return false;
  if (text.front() == '-' && digits == "0") return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         out != std::numeric_limits<std::int64_t>::min();
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) throw OverflowError("rational component out of range");
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (numerator == std::numeric_limits<std::int64_t>::min() ||
      denominator == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("rational component out of range");
  }
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide numerator, wide denominator) {
  if (denominator == 0) throw DomainError("rational division by zero");
  if (numerator == 0) return Rational();
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const uwide g = gcd(magnitude(numerator), magnitude(denominator));
  numerator /= wide(g);
  denominator /= wide(g);
  if (magnitude(numerator) > uwide(kComponentMax) || denominator > wide(kComponentMax)) {
    throw OverflowError("rational result exceeds 64-bit components");
  }
  Rational r;
  r.num_ = std::int64_t(numerator);
  r.den_ = std::int64_t(denominator);
  return r;
}

double Rational::to_double() const noexcept { return double(num_) / double(den_); }

std::string Rational::to_string() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) {
    out += '/';
    out += std::to_string(den_);
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::int64_t n = 0;
  std::int64_t d = 1;
  if (slash == std::string_view::npos) {
    if (!parse_component(text, true, n)) throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(n);
  }
  if (!parse_component(text.substr(0, slash), true, n) || !parse_component(text.substr(slash + 1), false, d) ||
      d == 0) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Rational r(n, d);
  if (r.num_ != n || r.den_ != d || d == 1) {
    throw ParseError("non-canonical rational '" + std::string(text) + "' (expected '" + r.to_string() + "')");
  }
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::reciprocal() const { return from_wide(den_, num_); }

Rational operator+(const Rational& a, const Rational& b) {
  using wide = __int128;
  const wide n = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
  return Rational::from_wide(n, checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational::from_wide(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return __int128(a.num_) * b.den_ <=> __int128(b.num_) * a.den_;
}

}  // namespace zerowell
