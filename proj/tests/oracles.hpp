#pragma once

// Test-only reference computations, kept independent of the library paths
// they are used to check.

#include <cmath>
#include <functional>

namespace oracle {

// Adaptive Simpson on [lo, hi].
inline double simpson(const std::function<double(double)>& f, double lo, double hi, double tol, int depth = 50) {
  const auto rule = [&](double a, double b, double fa, double fm, double fb) { return (b - a) / 6 * (fa + 4 * fm + fb); };
  const std::function<double(double, double, double, double, double, double, double, int)> step =
      [&](double a, double b, double fa, double fm, double fb, double whole, double eps, int left) -> double {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2;
    const double rm = (m + b) / 2;
    const double flm = f(lm);
    const double frm = f(rm);
    const double l = rule(a, m, fa, flm, fm);
    const double r = rule(m, b, fm, frm, fb);
    if (left <= 0 || std::abs(l + r - whole) <= 15 * eps) return l + r + (l + r - whole) / 15;
    return step(a, m, fa, flm, fm, l, eps / 2, left - 1) + step(m, b, fm, frm, fb, r, eps / 2, left - 1);
  };
  const double fa = f(lo);
  const double fb = f(hi);
  const double fm = f((lo + hi) / 2);
  return step(lo, hi, fa, fm, fb, rule(lo, hi, fa, fm, fb), tol, depth);
}

}  // namespace oracle
