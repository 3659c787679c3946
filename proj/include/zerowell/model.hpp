#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zerowell/scalar.hpp"

namespace zerowell {

/// Infinite walls at a and b, and the energy scale gamma = hbar^2 / 2m.
class WellConfig {
 public:
  /// Symmetric well on [-1, 1] with gamma = 1, all exact.
  WellConfig();
  WellConfig(Scalar wall_left, Scalar wall_right, Scalar gamma);

  /// Symmetric well [-half_width, half_width].
  static WellConfig symmetric(Scalar half_width, Scalar gamma = Scalar(1));

  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  const Scalar& gamma() const noexcept { return gamma_; }
  Scalar width() const { return b_ - a_; }
  bool is_exact() const noexcept { return a_.is_exact() && b_.is_exact() && gamma_.is_exact(); }

  friend bool operator==(const WellConfig&, const WellConfig&) = default;

 private:
  Scalar a_;
  Scalar b_;
  Scalar gamma_;
};

/// Same walls and gamma by value, ignoring exact/float mode.
bool same_well(const WellConfig& lhs, const WellConfig& rhs);

struct Knot {
  Scalar x;
  Scalar psi;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Candidate zero-energy eigenstate: linear between consecutive knots.
///
/// Construction only checks structure: at least two knots, positions
/// non-decreasing, first knot at the left wall and last at the right wall.
/// Everything else (wall amplitudes, duplicate positions, vanishing kinks, the
/// zero function) is reported by validate_state so it can be shown to a user.
class PiecewiseLinearState {
 public:
  PiecewiseLinearState(std::vector<Knot> knots, WellConfig config = WellConfig());

  const std::vector<Knot>& knots() const noexcept { return knots_; }
  const WellConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return knots_.size(); }
  bool is_exact() const noexcept;

  /// Every amplitude multiplied by k.
  PiecewiseLinearState scaled(const Scalar& k) const;

  friend bool operator==(const PiecewiseLinearState&, const PiecewiseLinearState&) = default;

 private:
  std::vector<Knot> knots_;
  WellConfig config_;
};

/// Potential term coefficient * delta(x - position). Attractive when negative.
struct DeltaSpike {
  Scalar x;
  Scalar c;
  friend bool operator==(const DeltaSpike&, const DeltaSpike&) = default;
};

/// Delta spikes strictly inside the well, sorted by position. May be empty.
class DeltaPotential {
 public:
  explicit DeltaPotential(WellConfig config = WellConfig());
  /// Sorts the spikes; throws ValidationError for a spike on or outside a
  /// wall, a zero coefficient, or two spikes at the same position.
  DeltaPotential(std::vector<DeltaSpike> spikes, WellConfig config);

  const std::vector<DeltaSpike>& spikes() const noexcept { return spikes_; }
  const WellConfig& config() const noexcept { return config_; }
  bool empty() const noexcept { return spikes_.empty(); }
  bool is_exact() const noexcept;

  friend bool operator==(const DeltaPotential&, const DeltaPotential&) = default;

 private:
  std::vector<DeltaSpike> spikes_;
  WellConfig config_;
};

enum class ViolationKind {
  kTooFewKnots,
  kNonzeroWall,
  kDuplicatePosition,
  kIdenticallyZero,
  kVanishingKink,
};

struct Violation {
  ViolationKind kind;
  std::size_t knot_index;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const noexcept;
  std::string summary() const;
};

ValidationReport validate_state(const PiecewiseLinearState& state);

/// Linear interpolation; throws DomainError outside [a, b]. Returns the stored
/// value when x coincides with a knot.
Scalar eval(const PiecewiseLinearState& state, const Scalar& x);

struct SegmentSlope {
  std::size_t segment;
  Scalar slope;
  friend bool operator==(const SegmentSlope&, const SegmentSlope&) = default;
};

/// Slope of each segment between knots i and i+1. Throws ValidationError if
/// two knots share a position.
std::vector<SegmentSlope> slopes(const PiecewiseLinearState& state);

/// Integral of psi^2 over the well, summed per segment as
/// (d / 3) (psi_i^2 + psi_i psi_{i+1} + psi_{i+1}^2).
Scalar norm_squared(const PiecewiseLinearState& state);

struct Normalized {
  PiecewiseLinearState state;  // float mode, unit norm
  Scalar norm;                 // sqrt of the original norm_squared
};

/// Throws DomainError for a state with zero norm.
Normalized normalize(const PiecewiseLinearState& state);

}  // namespace zerowell
