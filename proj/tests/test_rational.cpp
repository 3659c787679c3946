#include <cstdint>
#include <limits>

#include "doctest.h"
#include "zerowell/errors.hpp"
#include "zerowell/rational.hpp"
#include "zerowell/scalar.hpp"
#include "zerowell/splitmix.hpp"

using namespace zerowell;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(0, -5).den() == 1);
  CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
  CHECK((Rational(9, 4) * Rational(2, 3)) == Rational(3, 2));
  CHECK((Rational(1, 3) / Rational(-2, 9)) == Rational(-3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("canonical text round trip") {
  CHECK(Rational::parse("-9/4") == Rational(-9, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(-9, 4).to_string() == "-9/4");
  CHECK(Rational(4, 2).to_string() == "2");
  for (const char* bad : {"2/4", "1/-3", "3/1", "0/5", "-0", "01", "1/0", "", "1/", "/2", "1.5", "+1", "1 /2", "abc"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
}

TEST_CASE("overflow is reported, never wrapped") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), OverflowError);
  CHECK_THROWS_AS(Rational(big) * Rational(2), OverflowError);
  CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 1), OverflowError);
  const std::int64_t smallest = std::numeric_limits<std::int64_t>::min();
  CHECK_THROWS_AS(Rational{smallest}, OverflowError);
  // Large intermediates that reduce back into range are fine.
  CHECK((Rational(big, 3) * Rational(3, big)) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("scalar modes: exact stays exact, float is contagious") {
  const Scalar third = Scalar::ratio(1, 3);
  CHECK((third + third).is_exact());
  CHECK((third + third) == Scalar::ratio(2, 3));
  const Scalar mixed = third + Scalar(0.5);
  CHECK_FALSE(mixed.is_exact());
  CHECK(mixed.to_double() == doctest::Approx(5.0 / 6.0));
  CHECK_FALSE(Scalar(1) == Scalar(1.0));
  CHECK(numerically_equal(Scalar(1), Scalar(1.0)));
  CHECK(Scalar::ratio(1, 3) < Scalar(0.34));
  CHECK_THROWS_AS(Scalar(0.5).exact(), DomainError);
  CHECK_FALSE(sqrt(Scalar(4)).is_exact());
}

TEST_CASE("exact arithmetic is reproducible: random expression trees agree across evaluations") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational acc(1);
    Rational acc2(1);
    for (int step = 0; step < 6; ++step) {
      const Rational v(rng.between(-20, 20), rng.between(1, 20));
      if (v.is_zero()) continue;
      switch (rng.below(4)) {
        case 0: acc += v; acc2 = v + acc2; break;
        case 1: acc -= v; acc2 = -(v - acc2); break;
        case 2: acc *= v; acc2 = v * acc2; break;
        default: acc /= v; acc2 = acc2 * v.reciprocal(); break;
      }
    }
    CHECK(acc == acc2);
    CHECK(acc.den() > 0);
  }
}
