#include "zerowell/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zerowell/errors.hpp"

namespace zerowell {

WellConfig::WellConfig() : WellConfig(Scalar(-1), Scalar(1), Scalar(1)) {}

WellConfig::WellConfig(Scalar wall_left, Scalar wall_right, Scalar gamma)
    : a_(std::move(wall_left)), b_(std::move(wall_right)), gamma_(std::move(gamma)) {
  if (!(a_ < b_)) throw ValidationError("well walls must satisfy a < b, got a=" + a_.to_string() + " b=" + b_.to_string());
  if (!(gamma_ > Scalar(0))) throw ValidationError("gamma must be positive, got " + gamma_.to_string());
  if (!std::isfinite(a_.to_double()) || !std::isfinite(b_.to_double()) || !std::isfinite(gamma_.to_double())) {
    throw ValidationError("well parameters must be finite");
  }
}

WellConfig WellConfig::symmetric(Scalar half_width, Scalar gamma) {
  return WellConfig(-half_width, half_width, std::move(gamma));
}

bool same_well(const WellConfig& lhs, const WellConfig& rhs) {
  return numerically_equal(lhs.a(), rhs.a()) && numerically_equal(lhs.b(), rhs.b()) &&
         numerically_equal(lhs.gamma(), rhs.gamma());
}

// ---------------------------------------------------------------------------

PiecewiseLinearState::PiecewiseLinearState(std::vector<Knot> knots, WellConfig config)
    : knots_(std::move(knots)), config_(std::move(config)) {
  if (knots_.size() < 2) throw ValidationError("a state needs knots at both walls");
  if (!numerically_equal(knots_.front().x, config_.a()) || !numerically_equal(knots_.back().x, config_.b())) {
    throw ValidationError("first and last knots must sit on the walls");
  }
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (knots_[i + 1].x < knots_[i].x) {
      throw ValidationError("knot positions must be non-decreasing (knot " + std::to_string(i + 1) + ")");
    }
  }
  for (const auto& k : knots_) {
    if (!std::isfinite(k.x.to_double()) || !std::isfinite(k.psi.to_double())) {
      throw ValidationError("knot coordinates must be finite");
    }
  }
}

bool PiecewiseLinearState::is_exact() const noexcept {
  return std::all_of(knots_.begin(), knots_.end(), [](const Knot& k) { return k.x.is_exact() && k.psi.is_exact(); });
}

PiecewiseLinearState PiecewiseLinearState::scaled(const Scalar& k) const {
  std::vector<Knot> out = knots_;
  for (auto& knot : out) knot.psi = knot.psi * k;
  return PiecewiseLinearState(std::move(out), config_);
}

// ---------------------------------------------------------------------------

DeltaPotential::DeltaPotential(WellConfig config) : config_(std::move(config)) {}

DeltaPotential::DeltaPotential(std::vector<DeltaSpike> spikes, WellConfig config)
    : spikes_(std::move(spikes)), config_(std::move(config)) {
  std::stable_sort(spikes_.begin(), spikes_.end(), [](const DeltaSpike& l, const DeltaSpike& r) { return l.x < r.x; });
  for (std::size_t i = 0; i < spikes_.size(); ++i) {
    const auto& s = spikes_[i];
    if (!(config_.a() < s.x && s.x < config_.b())) {
      throw ValidationError("spike at x=" + s.x.to_string() + " is not strictly inside the well");
    }
    if (s.c.is_zero()) throw ValidationError("spike at x=" + s.x.to_string() + " has zero coefficient");
    if (!std::isfinite(s.c.to_double())) throw ValidationError("spike coefficient must be finite");
    if (i > 0 && numerically_equal(spikes_[i - 1].x, s.x)) {
      throw ValidationError("two spikes at x=" + s.x.to_string());
    }
  }
}

bool DeltaPotential::is_exact() const noexcept {
  return config_.is_exact() && std::all_of(spikes_.begin(), spikes_.end(), [](const DeltaSpike& s) {
           return s.x.is_exact() && s.c.is_exact();
         });
}

// ---------------------------------------------------------------------------

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

ValidationReport validate_state(const PiecewiseLinearState& state) {
  ValidationReport report;
  const auto& k = state.knots();
  auto add = [&](ViolationKind kind, std::size_t index, std::string msg) {
    report.violations.push_back({kind, index, std::move(msg)});
  };

  if (k.size() < 3) add(ViolationKind::kTooFewKnots, 0, "fewer than 3 knots: no interior point");
  if (!k.front().psi.is_zero()) add(ViolationKind::kNonzeroWall, 0, "nonzero amplitude at left wall (knot 0)");
  if (!k.back().psi.is_zero()) {
    add(ViolationKind::kNonzeroWall, k.size() - 1,
        "nonzero amplitude at right wall (knot " + std::to_string(k.size() - 1) + ")");
  }

  bool duplicates = false;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (numerically_equal(k[i].x, k[i - 1].x)) {
      duplicates = true;
      add(ViolationKind::kDuplicatePosition, i, "duplicate position x=" + k[i].x.to_string() + " (knot " + std::to_string(i) + ")");
    }
  }

  const bool all_zero = std::all_of(k.begin(), k.end(), [](const Knot& knot) { return knot.psi.is_zero(); });
  if (all_zero) add(ViolationKind::kIdenticallyZero, 0, "identically zero state");

  // Slopes are undefined across a duplicate position; skip the kink scan then.
  if (!duplicates && !all_zero) {
    for (std::size_t i = 1; i + 1 < k.size(); ++i) {
      const Scalar left = (k[i].psi - k[i - 1].psi) / (k[i].x - k[i - 1].x);
      const Scalar right = (k[i + 1].psi - k[i].psi) / (k[i + 1].x - k[i].x);
      if (!numerically_equal(left, right) && k[i].psi.is_zero()) {
        add(ViolationKind::kVanishingKink, i,
            "slope changes at x=" + k[i].x.to_string() + " where psi = 0 (knot " + std::to_string(i) + ")");
      }
    }
  }
  return report;
}

Scalar eval(const PiecewiseLinearState& state, const Scalar& x) {
  const auto& cfg = state.config();
  if (x < cfg.a() || x > cfg.b()) {
    throw DomainError("x=" + x.to_string() + " outside the well [" + cfg.a().to_string() + ", " + cfg.b().to_string() + "]");
  }
  const auto& k = state.knots();
  // First knot with position >= x.
  const auto it = std::lower_bound(k.begin(), k.end(), x, [](const Knot& knot, const Scalar& v) { return knot.x < v; });
  if (it == k.end()) return k.back().psi;
  if (numerically_equal(it->x, x) || it == k.begin()) return it->psi;
  const Knot& lo = *(it - 1);
  const Knot& hi = *it;
  return lo.psi + (x - lo.x) * (hi.psi - lo.psi) / (hi.x - lo.x);
}

std::vector<SegmentSlope> slopes(const PiecewiseLinearState& state) {
  const auto& k = state.knots();
  std::vector<SegmentSlope> out;
  out.reserve(k.size() - 1);
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Scalar d = k[i + 1].x - k[i].x;
    if (d.is_zero()) throw ValidationError("duplicate knot position x=" + k[i].x.to_string());
    out.push_back({i, (k[i + 1].psi - k[i].psi) / d});
  }
  return out;
}

Scalar norm_squared(const PiecewiseLinearState& state) {
  const auto& k = state.knots();
  Scalar total(0);
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Scalar d = k[i + 1].x - k[i].x;
    const Scalar& p = k[i].psi;
    const Scalar& q = k[i + 1].psi;
    total += d * (p * p + p * q + q * q) / Scalar(3);
  }
  return total;
}

Normalized normalize(const PiecewiseLinearState& state) {
  const double n2 = norm_squared(state).to_double();
  if (!(n2 > 0)) throw DomainError("cannot normalize a state with zero norm");
  const double norm = std::sqrt(n2);
  std::vector<Knot> out = state.knots();
  for (auto& knot : out) knot.psi = Scalar(knot.psi.to_double() / norm);
  return {PiecewiseLinearState(std::move(out), state.config()), Scalar(norm)};
}

}  // namespace zerowell
