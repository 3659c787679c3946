#pragma once

#include <vector>

#include "zerowell/model.hpp"
#include "zerowell/splitmix.hpp"

namespace fixtures {

using namespace zerowell;

inline PiecewiseLinearState tent(const Scalar& peak = Scalar(1)) {
  return PiecewiseLinearState({{Scalar(-1), Scalar(0)}, {Scalar(0), peak}, {Scalar(1), Scalar(0)}});
}

// The V2 eigenstate, obtained by propagating the jump rule by hand from
// psi(-1) = 0, psi'(-1) = 1 through spikes (-1/3, -9/4), (1/3, 9/2), (2/3, -9/2):
//   psi(-1/3) = 2/3, slope -> 1 - (9/4)(2/3) = -1/2
//   psi(1/3)  = 1/3, slope -> -1/2 + (9/2)(1/3) = 1
//   psi(2/3)  = 2/3, slope -> 1 - (9/2)(2/3) = -2
//   psi(1)    = 0
inline PiecewiseLinearState m_state() {
  return PiecewiseLinearState({{Scalar(-1), Scalar(0)},
                               {Scalar::ratio(-1, 3), Scalar::ratio(2, 3)},
                               {Scalar::ratio(1, 3), Scalar::ratio(1, 3)},
                               {Scalar::ratio(2, 3), Scalar::ratio(2, 3)},
                               {Scalar(1), Scalar(0)}});
}

inline DeltaPotential v2() {
  return DeltaPotential({{Scalar::ratio(-1, 3), Scalar::ratio(-9, 4)},
                         {Scalar::ratio(1, 3), Scalar::ratio(9, 2)},
                         {Scalar::ratio(2, 3), Scalar::ratio(-9, 2)}},
                        WellConfig());
}

// Random valid state on [-1, 1] built directly from the RNG (independent of
// the problem generator): interior knots on a 1/q grid, nonzero amplitudes.
// Kinks may or may not bend; collinear knots are legal.
inline PiecewiseLinearState random_state(SplitMix64& rng, bool exact) {
  const std::int64_t q = rng.between(3, 24);
  const int interior = int(rng.between(1, std::min<std::int64_t>(8, q - 1)));
  std::vector<std::int64_t> slots;
  for (std::int64_t i = 1; i < q; ++i) slots.push_back(i);
  for (int i = 0; i < interior; ++i) std::swap(slots[std::size_t(i)], slots[std::size_t(rng.between(i, std::int64_t(slots.size()) - 1))]);
  std::sort(slots.begin(), slots.begin() + interior);
  std::vector<Knot> knots{{Scalar(-1), Scalar(0)}};
  for (int i = 0; i < interior; ++i) {
    const Scalar x = Scalar(-1) + Scalar::ratio(2 * slots[std::size_t(i)], q);
    std::int64_t num = rng.between(1, 30) * (rng.below(2) ? 1 : -1);
    const Scalar psi = Scalar::ratio(num, rng.between(1, 12));
    knots.push_back({exact ? x : x.to_float(), exact ? psi : psi.to_float()});
  }
  knots.push_back({Scalar(1), Scalar(0)});
  return PiecewiseLinearState(std::move(knots));
}

}  // namespace fixtures
