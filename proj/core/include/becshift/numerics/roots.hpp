#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include <becshift/errors.hpp>

namespace becshift::roots {

// Brent's method: inverse-quadratic / secant steps guarded by bisection, the
// bracket [a, b] preserved throughout. rel_tol is relative to the root location.
template <class F>
double brent(F&& f, double a, double b, double rel_tol, int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw DomainError("brent: endpoints do not bracket a root");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
        0.5 * rel_tol * std::abs(b);
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {  // secant
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if (fb == 0.0) return b;
  }
  throw ConvergenceError("brent: iteration cap reached before tolerance");
}

// Geometric bracket widening around a positive seed x0: tries [x0/w, x0*w] for
// w = grow, grow^2, ... up to w_max, returns the first sign-changing bracket.
template <class F>
std::pair<double, double> widen_bracket(F&& f, double x0, double grow,
                                        double w_max) {
  if (!(x0 > 0.0) || !(grow > 1.0) || !(w_max >= grow))
    throw DomainError("widen_bracket: need x0 > 0 and 1 < grow <= w_max");
  for (double w = grow; w <= w_max * (1.0 + 1e-12); w *= grow) {
    const double lo = x0 / w, hi = x0 * w;
    if ((f(lo) > 0.0) != (f(hi) > 0.0)) return {lo, hi};
  }
  throw ConvergenceError("widen_bracket: no sign change up to the widest bracket");
}

}  // namespace becshift::roots
