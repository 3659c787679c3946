#pragma once

#include <cstddef>
#include <vector>

#include "zerowell/model.hpp"

namespace zerowell {

// General-energy shooting solver for the well plus delta spikes. Between
// spikes (psi, psi') is carried across a free region of width d by
//
//     | C(E,d)             S(E,d) |
//     | -(E/gamma) S(E,d)  C(E,d) |
//
// with C = cos(kd), S = sin(kd)/k above zero, cosh/sinh below, and C = 1,
// S = d at E = 0. Near zero (|E| d^2 / gamma < 1e-6) both are evaluated from
// their Taylor series so the mismatch is smooth through E = 0. Each spike
// adds (c / gamma) psi to psi'.

struct PropagatorState {
  double psi;
  double dpsi;
};

struct Sample {
  double x;
  double psi;
  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Transfer coefficients C(E, d) and S(E, d) for a spike-free stretch.
struct RegionCoefficients {
  double c;
  double s;
};
RegionCoefficients region_coefficients(double energy, double gamma, double width);

/// psi(b) when shooting from psi(a) = 0, psi'(a) = 1. Zero exactly at eigenvalues.
double shoot(double energy, const DeltaPotential& potential);

/// (psi, psi') at the right wall for the same initial conditions.
PropagatorState shoot_state(double energy, const DeltaPotential& potential);

/// Shooting solution (unscaled) at each position in xs; xs must be sorted and inside the well.
std::vector<double> shoot_profile(double energy, const DeltaPotential& potential, const std::vector<double>& xs);

struct ScanOptions {
  double e_min;
  double e_max;
  std::size_t grid_n = 2000;         // scan points including both ends
  double tol = 1e-12;                // bisection stops when the bracket is this narrow
  std::size_t max_bisections = 200;
  std::size_t node_intervals = 4096;  // dense sampling for node counts and samples
  friend bool operator==(const ScanOptions&, const ScanOptions&) = default;
};

/// Scan window [-10 gamma/L^2, 40 gamma/L^2] with L the half width of the well.
ScanOptions default_scan(const WellConfig& config);

struct Eigenpair {
  double energy;
  int nodes;
  double residual;  // |f(energy)|
  std::vector<Sample> samples;
  friend bool operator==(const Eigenpair&, const Eigenpair&) = default;
};

struct BracketFailure {
  double lo;
  double hi;
  friend bool operator==(const BracketFailure&, const BracketFailure&) = default;
};

struct SpectrumResult {
  DeltaPotential potential;
  ScanOptions scan;
  std::vector<Eigenpair> eigenvalues;  // increasing energy
  std::vector<BracketFailure> failures;

  std::vector<double> residuals() const;
  friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

/// Scans f on a uniform grid, bisects every sign change, and attaches node
/// counts and samples to each root. A grid point where f is exactly zero is
/// itself a root. Brackets that do not narrow to tol within max_bisections
/// land in failures; the rest are still returned.
///
/// Roots where f touches zero without changing sign are not detected.
SpectrumResult find_eigenvalues(const DeltaPotential& potential, const ScanOptions& options);

/// n_samples evenly spaced points from wall to wall plus every spike position,
/// scaled so max |psi| = 1 (measured on a dense grid, so even n_samples = 2
/// is well defined). Throws DomainError unless f changes sign within
/// [E - tol, E + tol] or vanishes at E.
std::vector<Sample> eigenstate_samples(const DeltaPotential& potential, double energy, std::size_t n_samples,
                                       double tol = 1e-8);

/// Sign changes in the sampled profile, ignoring points below 1e-9 of the peak.
int count_nodes(const std::vector<Sample>& samples);

}  // namespace zerowell
