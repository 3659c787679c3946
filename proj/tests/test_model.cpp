#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zerowell/errors.hpp"
#include "zerowell/model.hpp"

using namespace zerowell;
using fixtures::m_state;
using fixtures::tent;

TEST_CASE("well configuration") {
  const WellConfig def;
  CHECK(def.a() == Scalar(-1));
  CHECK(def.b() == Scalar(1));
  CHECK(def.gamma() == Scalar(1));
  CHECK(WellConfig::symmetric(Scalar(3)).width() == Scalar(6));
  CHECK_THROWS_AS(WellConfig(Scalar(1), Scalar(1), Scalar(1)), ValidationError);
  CHECK_THROWS_AS(WellConfig(Scalar(0), Scalar(1), Scalar(0)), ValidationError);
  CHECK_THROWS_AS(WellConfig(Scalar(0), Scalar(1), Scalar(-0.5)), ValidationError);
}

TEST_CASE("state construction enforces structure only") {
  CHECK_THROWS_AS(PiecewiseLinearState({{Scalar(-1), Scalar(0)}}), ValidationError);
  CHECK_THROWS_AS(PiecewiseLinearState({{Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar::ratio(1, 2), Scalar(0)}}),
                  ValidationError);
  CHECK_THROWS_AS(PiecewiseLinearState({{Scalar(-1), Scalar(0)}, {Scalar(1), Scalar(1)}, {Scalar(0), Scalar(0)}}),
                  ValidationError);
  // Non-zero walls and duplicates are data for validate_state, not construction errors.
  CHECK_NOTHROW(PiecewiseLinearState({{Scalar(-1), Scalar(1)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}));
}

TEST_CASE("delta potential validation") {
  const WellConfig cfg;
  CHECK_THROWS_AS(DeltaPotential({{Scalar(1), Scalar(-1)}}, cfg), ValidationError);
  CHECK_THROWS_AS(DeltaPotential({{Scalar(2), Scalar(-1)}}, cfg), ValidationError);
  CHECK_THROWS_AS(DeltaPotential({{Scalar(0), Scalar(0)}}, cfg), ValidationError);
  CHECK_THROWS_AS(DeltaPotential({{Scalar(0), Scalar(1)}, {Scalar(0.0), Scalar(2)}}, cfg), ValidationError);
  const DeltaPotential p({{Scalar::ratio(1, 2), Scalar(1)}, {Scalar::ratio(-1, 2), Scalar(2)}}, cfg);
  CHECK(p.spikes().front().x == Scalar::ratio(-1, 2));
  CHECK(DeltaPotential(cfg).empty());
}

TEST_CASE("validate_state examples") {
  CHECK(validate_state(tent()).ok());
  CHECK(validate_state(m_state()).ok());

  const auto zero = validate_state(tent(Scalar(0)));
  CHECK(zero.has(ViolationKind::kIdenticallyZero));

  const PiecewiseLinearState pinned(
      {{Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar::ratio(1, 2), Scalar(0)}, {Scalar(1), Scalar(0)}});
  const auto r = validate_state(pinned);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == ViolationKind::kVanishingKink);
  CHECK(r.violations[0].knot_index == 2);

  const PiecewiseLinearState walls({{Scalar(-1), Scalar(1)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(2)}});
  const auto w = validate_state(walls);
  CHECK(w.violations.size() == 2);
  CHECK(w.has(ViolationKind::kNonzeroWall));

  const PiecewiseLinearState dup(
      {{Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(0), Scalar(2)}, {Scalar(1), Scalar(0)}});
  const auto d = validate_state(dup);
  CHECK(d.has(ViolationKind::kDuplicatePosition));
  CHECK(d.violations[0].knot_index == 2);

  const PiecewiseLinearState two({{Scalar(-1), Scalar(0)}, {Scalar(1), Scalar(0)}});
  CHECK(validate_state(two).has(ViolationKind::kTooFewKnots));

  // A zero crossing on a straight stretch is not a kink.
  const PiecewiseLinearState crossing({{Scalar(-1), Scalar(0)},
                                       {Scalar::ratio(-1, 2), Scalar(1)},
                                       {Scalar(0), Scalar(0)},
                                       {Scalar::ratio(1, 2), Scalar(-1)},
                                       {Scalar(1), Scalar(0)}});
  CHECK(validate_state(crossing).ok());
}

TEST_CASE("eval") {
  CHECK(eval(tent(), Scalar::ratio(1, 2)) == Scalar::ratio(1, 2));
  CHECK(eval(tent(), Scalar(-1)) == Scalar(0));
  CHECK(eval(m_state(), Scalar(0)) == Scalar::ratio(1, 2));
  CHECK_THROWS_AS(eval(tent(), Scalar::ratio(3, 2)), DomainError);
  CHECK_THROWS_AS(eval(tent(), Scalar(-1.0001)), DomainError);
}

TEST_CASE("slopes") {
  const auto expect = [](const PiecewiseLinearState& s, std::vector<Scalar> want) {
    const auto got = slopes(s);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(got[i].segment == i);
      CHECK(got[i].slope == want[i]);
    }
  };
  expect(tent(), {Scalar(1), Scalar(-1)});
  expect(tent(Scalar(5)), {Scalar(5), Scalar(-5)});
  expect(m_state(), {Scalar(1), Scalar::ratio(-1, 2), Scalar(1), Scalar(-2)});
}

TEST_CASE("norm_squared against quadrature") {
  CHECK(norm_squared(tent()) == Scalar::ratio(2, 3));
  CHECK(norm_squared(tent(Scalar(3))) == Scalar(6));

  // Frozen from the quadrature oracle below: 0.407407407407... = 11/27.
  const auto m = m_state();
  const double quad = oracle::simpson(
      [&](double x) {
        const double v = eval(m, Scalar(x)).to_double();
        return v * v;
      },
      -1, 1, 1e-14);
  CHECK(quad == doctest::Approx(11.0 / 27.0).epsilon(1e-12));
  CHECK(norm_squared(m) == Scalar::ratio(11, 27));
}

TEST_CASE("normalize") {
  const auto n = normalize(tent());
  CHECK_FALSE(n.state.is_exact());
  CHECK(n.state.knots()[1].psi.to_double() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(n.state.knots()[1].psi.to_double() == doctest::Approx(1.224744871).epsilon(1e-9));
  CHECK(std::abs(norm_squared(n.state).to_double() - 1) < 1e-12);
  CHECK(n.norm.to_double() == doctest::Approx(std::sqrt(2.0 / 3.0)));

  const auto again = normalize(n.state);
  for (std::size_t i = 0; i < n.state.size(); ++i) {
    CHECK(std::abs(again.state.knots()[i].psi.to_double() - n.state.knots()[i].psi.to_double()) < 1e-12);
  }
  CHECK_THROWS_AS(normalize(tent(Scalar(0))), DomainError);
}

TEST_CASE("property: scaling, eval at knots, and closed-form norm vs quadrature on 1000 random states") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool exact = trial % 2 == 0;
    const auto s = fixtures::random_state(rng, exact);
    CAPTURE(trial);

    const Scalar k = exact ? Scalar::ratio(rng.between(-9, 9) | 1, rng.between(1, 7)) : Scalar(-2.5);
    const auto ks = s.scaled(k);
    const auto r1 = validate_state(s);
    const auto r2 = validate_state(ks);
    REQUIRE(r1.violations.size() == r2.violations.size());
    for (std::size_t i = 0; i < r1.violations.size(); ++i) {
      CHECK(r1.violations[i].kind == r2.violations[i].kind);
      CHECK(r1.violations[i].knot_index == r2.violations[i].knot_index);
    }
    const auto sl = slopes(s);
    const auto ksl = slopes(ks);
    for (std::size_t i = 0; i < sl.size(); ++i) {
      if (exact) {
        CHECK(ksl[i].slope == sl[i].slope * k);
      } else {
        CHECK(ksl[i].slope.to_double() == doctest::Approx((sl[i].slope * k).to_double()).epsilon(1e-14));
      }
    }

    for (const auto& knot : s.knots()) CHECK(eval(s, knot.x) == knot.psi);

    const double closed = norm_squared(s).to_double();
    const double quad = oracle::simpson(
        [&](double x) {
          const double v = eval(s, Scalar(std::clamp(x, -1.0, 1.0))).to_double();
          return v * v;
        },
        -1, 1, 1e-13 * std::max(1.0, closed));
    CHECK(std::abs(quad - closed) <= 1e-10 * closed);
  }
}
