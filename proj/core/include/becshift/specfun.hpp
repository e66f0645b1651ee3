#pragma once

#include <becshift/errors.hpp>

namespace becshift {

// Tolerance and budget knobs shared by series and quadrature evaluations.
struct Accuracy {
  double rel_tol = 1e-10;  // requested relative accuracy, in (0, 1e-6]
  int max_terms = 200000;  // series term cap, >= 100
  void validate() const;
};

// Gamma(x) for x > 0.
double gamma_fn(double x);

// zeta(nu) for nu > 1; nu = 1 is a pole.
double riemann_zeta(double nu);

// Bose-Einstein function g_nu(z) = sum_{k>=1} z^k / k^nu for nu > 0 and
// 0 <= z <= 1; at z = 1 it equals zeta(nu) and requires nu > 1. Evaluates the
// power series for z <= 0.99 and the integral representation beyond, where the
// series degrades.
double bose_fn(double nu, double z, const Accuracy& acc = {});

// The two underlying routes, exposed for cross-validation against each other.
double bose_fn_series(double nu, double z, const Accuracy& acc = {});    // z < 1
double bose_fn_integral(double nu, double z, const Accuracy& acc = {});  // z <= 1

}  // namespace becshift
