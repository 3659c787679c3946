#include "zerowell/jeopardy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "zerowell/errors.hpp"

namespace zerowell {

namespace {

constexpr double kFloatClosureTolerance = 1e-12;
constexpr double kNormTolerance = 1e-10;

// Zero in the same mode as v (and never -0.0).
Scalar zero_like(const Scalar& v) { return v.is_exact() ? Scalar(0) : Scalar(0.0); }

}  // namespace

DeltaPotential invert(const PiecewiseLinearState& state) {
  const ValidationReport report = validate_state(state);
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::kVanishingKink) {
      throw UnsolvableKinkError(v.knot_index, "unsolvable kink: " + v.message);
    }
  }
  if (!report.ok()) throw ValidationError("invalid state: " + report.summary());

  const auto& knots = state.knots();
  const auto s = slopes(state);
  const Scalar& gamma = state.config().gamma();
  std::vector<DeltaSpike> spikes;
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const Scalar jump = s[i].slope - s[i - 1].slope;
    if (jump.is_zero()) continue;
    spikes.push_back({knots[i].x, gamma * jump / knots[i].psi});
  }
  return DeltaPotential(std::move(spikes), state.config());
}

std::optional<PiecewiseLinearState> forward_construct(const DeltaPotential& potential, const Scalar& initial_slope) {
  if (initial_slope.is_zero()) throw ValidationError("initial slope must be nonzero");
  const auto& cfg = potential.config();
  std::vector<Knot> knots;
  knots.reserve(potential.spikes().size() + 2);

  const Scalar zero = zero_like(initial_slope);
  Scalar x = cfg.a();
  Scalar psi = zero;
  Scalar slope = initial_slope;
  knots.push_back({x, psi});
  for (const auto& spike : potential.spikes()) {
    psi = psi + slope * (spike.x - x);
    x = spike.x;
    knots.push_back({x, psi});
    slope = slope + spike.c / cfg.gamma() * psi;
  }
  const Scalar end = psi + slope * (cfg.b() - x);

  if (end.is_exact() && std::all_of(knots.begin(), knots.end(), [](const Knot& k) { return k.psi.is_exact(); })) {
    if (!end.is_zero()) return std::nullopt;
  } else {
    double peak = 0;
    for (const auto& k : knots) peak = std::max(peak, std::abs(k.psi.to_double()));
    if (std::abs(end.to_double()) > kFloatClosureTolerance * peak) return std::nullopt;
  }
  knots.push_back({cfg.b(), zero_like(end)});
  return PiecewiseLinearState(std::move(knots), cfg);
}

EnergyReport energy_integrals(const PiecewiseLinearState& state, const DeltaPotential& potential) {
  if (!same_well(state.config(), potential.config())) {
    throw ValidationError("state and potential live in different wells");
  }
  const auto& knots = state.knots();
  Scalar kinetic(0);
  for (const auto& seg : slopes(state)) {
    const Scalar d = knots[seg.segment + 1].x - knots[seg.segment].x;
    kinetic += seg.slope * seg.slope * d;
  }
  kinetic *= state.config().gamma();

  Scalar potential_energy(0);
  for (const auto& spike : potential.spikes()) {
    const Scalar psi = eval(state, spike.x);
    potential_energy += spike.c * psi * psi;
  }
  return {kinetic, potential_energy, kinetic + potential_energy};
}

EnergyReport expectations(const PiecewiseLinearState& state, const DeltaPotential& potential) {
  const double n2 = norm_squared(state).to_double();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw DomainError("expectations need a unit-norm state, norm^2 = " + Scalar(n2).to_string());
  }
  return energy_integrals(state, potential);
}

RoundtripReport roundtrip_check(const PiecewiseLinearState& state) {
  DeltaPotential potential = invert(state);
  auto rebuilt = forward_construct(potential);
  if (!rebuilt) {
    // Cannot happen for a valid state; reported rather than thrown so callers see the potential.
    return {std::move(potential), std::nullopt, Scalar(0), Scalar(0)};
  }

  const auto& knots = state.knots();
  const auto anchor = std::find_if(knots.begin() + 1, knots.end() - 1, [](const Knot& k) { return !k.psi.is_zero(); });
  const Scalar scale = anchor->psi / eval(*rebuilt, anchor->x);

  std::vector<Scalar> xs;
  for (const auto& k : knots) xs.push_back(k.x);
  for (const auto& k : rebuilt->knots()) xs.push_back(k.x);

  Scalar worst = zero_like(scale);
  for (const auto& x : xs) {
    const Scalar dev = (eval(state, x) - scale * eval(*rebuilt, x)).abs();
    if (dev > worst) worst = dev;
  }
  return {std::move(potential), std::move(rebuilt), scale, worst};
}

}  // namespace zerowell
