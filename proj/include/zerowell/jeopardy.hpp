#pragma once

#include <optional>

#include "zerowell/model.hpp"

namespace zerowell {

/// Recovers the delta potential that makes a piecewise-linear state a
/// zero-energy eigenstate. Each kink at x_i with slope change
/// dslope = slope_right - slope_left needs a spike of strength
///
///     c_i = gamma * dslope / psi(x_i)
///
/// and knots without a slope change produce nothing. The result does not
/// depend on the overall scale of the state and is exact for exact input.
///
/// Throws UnsolvableKinkError for a kink where psi vanishes and
/// ValidationError for any other validate_state violation.
DeltaPotential invert(const PiecewiseLinearState& state);

/// Shoots from the left wall with psi(a) = 0 and the given initial slope,
/// applying dslope = (c / gamma) psi(x0) at every spike. Returns the state if
/// it comes back to zero at the right wall: exactly for exact input, or within
/// 1e-12 of the largest knot amplitude for float input. The returned state has
/// one interior knot per spike.
std::optional<PiecewiseLinearState> forward_construct(const DeltaPotential& potential,
                                                      const Scalar& initial_slope = Scalar(1));

struct EnergyReport {
  Scalar t_expect;
  Scalar v_expect;
  Scalar e_expect;  // always t_expect + v_expect
  friend bool operator==(const EnergyReport&, const EnergyReport&) = default;
};

/// Unnormalized integrals gamma * int psi'^2 and sum_j c_j psi(x_j)^2. For a
/// zero-energy pair these cancel exactly, at any scale.
EnergyReport energy_integrals(const PiecewiseLinearState& state, const DeltaPotential& potential);

/// <T>, <V> and <E> for a unit-norm state (norm^2 within 1e-10 of 1, else
/// DomainError). Spikes need not sit on kinks: each one contributes
/// c psi(x)^2 wherever it is.
EnergyReport expectations(const PiecewiseLinearState& state, const DeltaPotential& potential);

struct RoundtripReport {
  DeltaPotential potential;
  std::optional<PiecewiseLinearState> reconstructed;
  Scalar scale;          // reconstructed * scale is compared against the input
  Scalar max_deviation;  // over all knots of both states; zero when exact
  bool ok() const { return reconstructed.has_value() && max_deviation.is_zero(); }
};

/// invert, then forward_construct, then compare up to scale. The scale is
/// matched at the first interior knot with nonzero amplitude.
RoundtripReport roundtrip_check(const PiecewiseLinearState& state);

}  // namespace zerowell
