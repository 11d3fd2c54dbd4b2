#pragma once

#include <cmath>
#include <utility>

namespace sumur {

/// Golden-section minimization of f on [lo, hi]. Stops once the bracket is
/// no wider than tol. Returns {argmin, f(argmin)}; the bracket endpoints are
/// included as candidates so a minimum sitting on an end is not lost.
template <class F>
std::pair<double, double> golden_section_minimize(F&& f, double lo, double hi, double tol,
                                                  int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  std::pair<double, double> best = fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
  const double mid = 0.5 * (a + b);
  for (double x : {mid, lo, hi}) {
    const double fx = f(x);
    if (fx < best.second) best = {x, fx};
  }
  return best;
}

}  // namespace sumur
