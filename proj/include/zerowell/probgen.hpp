#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerowell/model.hpp"

namespace zerowell {

struct Difficulty {
  int kinks;
  std::int64_t denom_bound;
  friend bool operator==(const Difficulty&, const Difficulty&) = default;
};

/// One worksheet item: the drawn eigenstate and the potential it answers to.
struct Problem {
  std::string id;
  PiecewiseLinearState state;
  DeltaPotential solution;
  Difficulty difficulty;

  const WellConfig& config() const { return state.config(); }
  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Throws ValidationError unless the state is exact and valid, every knot
/// coordinate has denominator <= denom_bound, the solution is exactly
/// invert(state), and the kink count matches the difficulty.
void check_problem(const Problem& problem);

constexpr int kMaxKinks = 8;
constexpr std::int64_t kMaxDenomBound = 1'000'000;

/// Deterministic in (seed, kinks, denom_bound, config).
///
/// Draw order, one SplitMix64 stream seeded with `seed`, repeated until a
/// draw has a genuine slope change at every kink (at most 10^4 attempts):
///   1. grid q uniform in [max(2, kinks + 1), denom_bound]
///   2. kink indices: partial Fisher-Yates over {1, ..., q-1}, first `kinks`
///      entries, then sorted; positions are a + i (b - a) / q
///   3. per kink in position order: magnitude m uniform in [1, denom_bound],
///      then sign (0 -> +, 1 -> -); amplitude is +-m / q
///
/// Throws ValidationError for kinks outside 1..8, denom_bound < max(2, kinks + 1)
/// or above kMaxDenomBound, or a well with float walls.
Problem generate(std::uint64_t seed, int kinks, std::int64_t denom_bound, const WellConfig& config = WellConfig());

struct SpikeGrade {
  Scalar x;
  bool matched;
  Scalar expected_c;
  std::optional<Scalar> proposed_c;
  std::optional<double> rel_error;
  friend bool operator==(const SpikeGrade&, const SpikeGrade&) = default;
};

struct GradeReport {
  bool pass;
  double rel_tol;
  Scalar pos_tol;
  std::vector<SpikeGrade> per_spike;  // one per expected spike
  std::vector<DeltaSpike> extras;     // proposed spikes matching no expected one
  std::vector<DeltaSpike> missing;    // expected spikes with no proposed match
  friend bool operator==(const GradeReport&, const GradeReport&) = default;
};

/// Matches each expected spike to the nearest unused proposed spike within
/// pos_tol, then compares coefficients by |c_prop - c_exp| / |c_exp|. Throws
/// ValidationError if the proposed potential sits in a different well.
GradeReport grade(const Problem& problem, const DeltaPotential& proposed, double rel_tol = 1e-6,
                  const Scalar& pos_tol = Scalar(0));

}  // namespace zerowell
