#include "zerowell/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "zerowell/errors.hpp"

namespace zerowell {

namespace {

constexpr double kSeriesThreshold = 1e-6;
constexpr double kNodeThreshold = 1e-9;
constexpr double kClosureTolerance = 1e-12;
constexpr std::size_t kScaleIntervals = 4096;

struct Spike {
  double x;
  double strength;  // c / gamma
};

struct Shooter {
  double a;
  double b;
  double gamma;
  double energy;
  std::vector<Spike> spikes;

  Shooter(double e, const DeltaPotential& potential)
      : a(potential.config().a().to_double()),
        b(potential.config().b().to_double()),
        gamma(potential.config().gamma().to_double()),
        energy(e) {
    for (const auto& s : potential.spikes()) spikes.push_back({s.x.to_double(), s.c.to_double() / gamma});
  }

  PropagatorState advance(PropagatorState st, double width) const {
    if (width == 0) return st;
    const auto [c, s] = region_coefficients(energy, gamma, width);
    return {c * st.psi + s * st.dpsi, -(energy / gamma) * s * st.psi + c * st.dpsi};
  }

  // Walks the sorted positions, applying each spike once it has been reached.
  std::vector<double> profile(const std::vector<double>& xs) const {
    std::vector<double> out;
    out.reserve(xs.size());
    PropagatorState st{0.0, 1.0};
    double here = a;
    std::size_t next = 0;
    for (double x : xs) {
      while (next < spikes.size() && spikes[next].x <= x) {
        st = advance(st, spikes[next].x - here);
        here = spikes[next].x;
        st.dpsi += spikes[next].strength * st.psi;
        ++next;
      }
      st = advance(st, x - here);
      here = x;
      out.push_back(st.psi);
    }
    return out;
  }

  PropagatorState at_right_wall() const {
    PropagatorState st{0.0, 1.0};
    double here = a;
    for (const auto& s : spikes) {
      st = advance(st, s.x - here);
      here = s.x;
      st.dpsi += s.strength * st.psi;
    }
    return advance(st, b - here);
  }
};

// Uniform grid from a to b with every spike position merged in. A spike that
// lands on a grid point replaces it so the point count stays n.
std::vector<double> sample_positions(const DeltaPotential& potential, std::size_t n) {
  const double a = potential.config().a().to_double();
  const double b = potential.config().b().to_double();
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = a + (b - a) * double(i) / double(n - 1);
  xs.back() = b;

  const double snap = 1e-12 * (b - a);
  for (const auto& s : potential.spikes()) {
    const double x = s.x.to_double();
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    auto nearest = it;
    if (it == xs.end() || (it != xs.begin() && x - *(it - 1) < *it - x)) nearest = it - 1;
    const bool interior = nearest != xs.begin() && nearest != xs.end() - 1;
    if (interior && std::abs(*nearest - x) <= snap) {
      *nearest = x;
    } else {
      xs.insert(it, x);
    }
  }
  return xs;
}

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

RegionCoefficients region_coefficients(double energy, double gamma, double width) {
  const double k2 = energy / gamma;
  const double z = k2 * width * width;
  if (std::abs(z) < kSeriesThreshold) {
    return {1.0 - z / 2.0 + z * z / 24.0, width * (1.0 - z / 6.0 + z * z / 120.0)};
  }
  if (k2 > 0) {
    const double k = std::sqrt(k2);
    return {std::cos(k * width), std::sin(k * width) / k};
  }
  const double kappa = std::sqrt(-k2);
  return {std::cosh(kappa * width), std::sinh(kappa * width) / kappa};
}

PropagatorState shoot_state(double energy, const DeltaPotential& potential) {
  return Shooter(energy, potential).at_right_wall();
}

double shoot(double energy, const DeltaPotential& potential) { return shoot_state(energy, potential).psi; }

std::vector<double> shoot_profile(double energy, const DeltaPotential& potential, const std::vector<double>& xs) {
  return Shooter(energy, potential).profile(xs);
}

ScanOptions default_scan(const WellConfig& config) {
  const double half = config.width().to_double() / 2.0;
  const double unit = config.gamma().to_double() / (half * half);
  return ScanOptions{-10.0 * unit, 40.0 * unit};
}

std::vector<double> SpectrumResult::residuals() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.push_back(e.residual);
  return out;
}

int count_nodes(const std::vector<Sample>& samples) {
  double peak = 0;
  for (const auto& s : samples) peak = std::max(peak, std::abs(s.psi));
  int nodes = 0;
  int last = 0;
  for (const auto& s : samples) {
    if (std::abs(s.psi) <= kNodeThreshold * peak) continue;
    const int sg = sign_of(s.psi);
    if (last != 0 && sg != last) ++nodes;
    last = sg;
  }
  return nodes;
}

std::vector<Sample> eigenstate_samples(const DeltaPotential& potential, double energy, std::size_t n_samples,
                                       double tol) {
  if (n_samples < 2) throw ValidationError("need at least 2 samples (the walls)");
  const Shooter shooter(energy, potential);

  const double f = shooter.at_right_wall().psi;
  const auto dense = shooter.profile(sample_positions(potential, kScaleIntervals + 1));
  double peak = 0;
  for (double v : dense) peak = std::max(peak, std::abs(v));

  const bool closes = f == 0 || std::abs(f) <= kClosureTolerance * peak ||
                      sign_of(shoot(energy - tol, potential)) != sign_of(shoot(energy + tol, potential));
  if (!closes) {
    throw DomainError("E=" + Scalar(energy).to_string() + " is not an eigenvalue (f(E)=" + Scalar(f).to_string() + ")");
  }

  const auto xs = sample_positions(potential, n_samples);
  const auto psi = shooter.profile(xs);
  for (double v : psi) peak = std::max(peak, std::abs(v));
  std::vector<Sample> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = {xs[i], psi[i] / peak};
  return out;
}

SpectrumResult find_eigenvalues(const DeltaPotential& potential, const ScanOptions& options) {
  if (!(options.e_min < options.e_max)) throw ValidationError("scan needs e_min < e_max");
  if (options.grid_n < 2) throw ValidationError("scan needs at least 2 grid points");
  if (!(options.tol > 0)) throw ValidationError("tolerance must be positive");
  if (options.node_intervals < 1) throw ValidationError("node sampling needs at least 1 interval");

  const std::size_t n = options.grid_n;
  std::vector<double> energies(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    energies[i] = options.e_min + (options.e_max - options.e_min) * double(i) / double(n - 1);
  }
  energies.back() = options.e_max;
  for (std::size_t i = 0; i < n; ++i) values[i] = shoot(energies[i], potential);

  SpectrumResult result{potential, options, {}, {}};
  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == 0) {
      roots.push_back(energies[i]);
      continue;
    }
    if (i + 1 == n || values[i + 1] == 0 || sign_of(values[i]) == sign_of(values[i + 1])) continue;

    double lo = energies[i];
    double hi = energies[i + 1];
    double f_lo = values[i];
    bool converged = false;
    for (std::size_t it = 0; it < options.max_bisections; ++it) {
      if (hi - lo <= options.tol) {
        converged = true;
        break;
      }
      const double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) {  // bracket is down to adjacent doubles
        converged = true;
        break;
      }
      const double f_mid = shoot(mid, potential);
      if (f_mid == 0) {
        lo = hi = mid;
        converged = true;
        break;
      }
      if (sign_of(f_mid) == sign_of(f_lo)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    if (!converged && hi - lo <= options.tol) converged = true;
    if (converged) {
      roots.push_back(lo + (hi - lo) / 2);
    } else {
      result.failures.push_back({lo, hi});
    }
  }

  for (double e : roots) {
    auto samples = eigenstate_samples(potential, e, options.node_intervals + 1, options.tol);
    const int nodes = count_nodes(samples);
    result.eigenvalues.push_back({e, nodes, std::abs(shoot(e, potential)), std::move(samples)});
  }
  return result;
}

}  // namespace zerowell
