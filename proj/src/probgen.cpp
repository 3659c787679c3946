#include "zerowell/probgen.hpp"

#include <algorithm>
#include <numeric>

#include "zerowell/errors.hpp"
#include "zerowell/jeopardy.hpp"
#include "zerowell/splitmix.hpp"

namespace zerowell {

namespace {

constexpr int kMaxAttempts = 10'000;

std::int64_t min_grid(int kinks) { return std::max<std::int64_t>(2, kinks + 1); }

bool every_kink_bends(const PiecewiseLinearState& state) {
  const auto s = slopes(state);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].slope == s[i - 1].slope) return false;
  }
  return true;
}

}  // namespace

void check_problem(const Problem& problem) {
  const auto& state = problem.state;
  const auto& cfg = state.config();
  if (!state.is_exact() || !cfg.is_exact()) throw ValidationError("problem state must be exact");
  if (!same_well(cfg, problem.solution.config())) throw ValidationError("problem solution lives in a different well");
  if (const auto report = validate_state(state); !report.ok()) {
    throw ValidationError("problem state is invalid: " + report.summary());
  }
  const auto bound = problem.difficulty.denom_bound;
  for (const auto& k : state.knots()) {
    // Positions are measured as a fraction of the well so any rational well works.
    const Rational frac = ((k.x - cfg.a()) / cfg.width()).exact();
    if (frac.den() > bound || k.psi.exact().den() > bound) {
      throw ValidationError("knot (" + k.x.to_string() + ", " + k.psi.to_string() + ") exceeds denominator bound " +
                            std::to_string(bound));
    }
  }
  if (invert(state) != problem.solution) throw ValidationError("problem solution is not the inverse of its state");
  if (problem.solution.spikes().size() != std::size_t(problem.difficulty.kinks)) {
    throw ValidationError("problem kink count does not match its difficulty");
  }
}

Problem generate(std::uint64_t seed, int kinks, std::int64_t denom_bound, const WellConfig& config) {
  if (kinks < 1 || kinks > kMaxKinks) {
    throw ValidationError("kinks must be in 1.." + std::to_string(kMaxKinks) + ", got " + std::to_string(kinks));
  }
  if (denom_bound < min_grid(kinks) || denom_bound > kMaxDenomBound) {
    throw ValidationError("denom_bound must be in " + std::to_string(min_grid(kinks)) + ".." +
                          std::to_string(kMaxDenomBound) + " for " + std::to_string(kinks) + " kinks");
  }
  if (!config.is_exact()) throw ValidationError("problems need a well with exact walls and gamma");

  SplitMix64 rng(seed);
  std::vector<std::int64_t> slots;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::int64_t q = rng.between(min_grid(kinks), denom_bound);

    slots.resize(std::size_t(q - 1));
    std::iota(slots.begin(), slots.end(), std::int64_t{1});
    for (int i = 0; i < kinks; ++i) {
      const auto j = std::size_t(rng.between(i, std::int64_t(slots.size()) - 1));
      std::swap(slots[std::size_t(i)], slots[j]);
    }
    std::sort(slots.begin(), slots.begin() + kinks);

    std::vector<Knot> knots;
    knots.push_back({config.a(), Scalar(0)});
    for (int i = 0; i < kinks; ++i) {
      const std::int64_t magnitude = rng.between(1, denom_bound);
      const std::int64_t sign = rng.below(2) == 0 ? 1 : -1;
      const Scalar x = config.a() + config.width() * Scalar::ratio(slots[std::size_t(i)], q);
      knots.push_back({x, Scalar::ratio(sign * magnitude, q)});
    }
    knots.push_back({config.b(), Scalar(0)});

    PiecewiseLinearState state(std::move(knots), config);
    if (!every_kink_bends(state)) continue;

    DeltaPotential solution = invert(state);
    std::string id = "zw-" + std::to_string(seed) + "-k" + std::to_string(kinks) + "-q" + std::to_string(denom_bound);
    return Problem{std::move(id), std::move(state), std::move(solution), Difficulty{kinks, denom_bound}};
  }
  throw ValidationError("no valid problem after " + std::to_string(kMaxAttempts) + " attempts");
}

GradeReport grade(const Problem& problem, const DeltaPotential& proposed, double rel_tol, const Scalar& pos_tol) {
  if (!same_well(problem.config(), proposed.config())) {
    throw ValidationError("proposed potential uses a different well than the problem");
  }
  if (pos_tol < Scalar(0)) throw ValidationError("pos_tol must be non-negative");

  GradeReport report{true, rel_tol, pos_tol, {}, {}, {}};
  const auto& offered = proposed.spikes();
  std::vector<bool> used(offered.size(), false);

  for (const auto& want : problem.solution.spikes()) {
    std::optional<std::size_t> best;
    Scalar best_dist;
    for (std::size_t j = 0; j < offered.size(); ++j) {
      if (used[j]) continue;
      const Scalar dist = (offered[j].x - want.x).abs();
      if (dist > pos_tol) continue;
      if (!best || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (!best) {
      report.per_spike.push_back({want.x, false, want.c, std::nullopt, std::nullopt});
      report.missing.push_back(want);
      report.pass = false;
      continue;
    }
    used[*best] = true;
    const Scalar& got = offered[*best].c;
    const double rel = ((got - want.c).abs() / want.c.abs()).to_double();
    report.per_spike.push_back({want.x, true, want.c, got, rel});
    if (!(rel <= rel_tol)) report.pass = false;
  }
  for (std::size_t j = 0; j < offered.size(); ++j) {
    if (!used[j]) {
      report.extras.push_back(offered[j]);
      report.pass = false;
    }
  }
  return report;
}

}  // namespace zerowell
