#include <becshift/specfun.hpp>

#include <cmath>

#include <becshift/numerics/quadrature.hpp>

namespace becshift {

void Accuracy::validate() const {
  if (!(rel_tol > 0.0) || !(rel_tol <= 1e-6))
    throw DomainError("Accuracy: rel_tol must lie in (0, 1e-6]");
  if (max_terms < 100)
    throw DomainError("Accuracy: max_terms must be at least 100");
}

double gamma_fn(double x) {
  if (!(x > 0.0))
    throw DomainError("gamma_fn: argument must be strictly positive");
  return std::tgamma(x);
}

double riemann_zeta(double nu) {
  if (nu == 1.0) throw DivergenceError("riemann_zeta: pole at nu = 1");
  if (!(nu > 1.0))
    throw DomainError("riemann_zeta: defined here only for nu > 1");
  return std::riemann_zeta(nu);
}

namespace {

void check_bose_domain(double nu, double z) {
  if (!(nu > 0.0)) throw DomainError("bose_fn: nu must be strictly positive");
  if (!(z >= 0.0) || !(z <= 1.0))
    throw DomainError("bose_fn: fugacity must lie in [0, 1]");
}

}  // namespace

double bose_fn_series(double nu, double z, const Accuracy& acc) {
  acc.validate();
  check_bose_domain(nu, z);
  if (z == 1.0)
    throw DomainError("bose_fn_series: the series route needs z < 1");
  if (z == 0.0) return 0.0;

  // Term ratio is z*(k/(k+1))^nu <= z, so the tail after term k is bounded by
  // term_k * z / (1 - z).
  double sum = 0.0;
  double zk = z;
  for (int k = 1; k <= acc.max_terms; ++k) {
    const double term = zk / std::pow(static_cast<double>(k), nu);
    sum += term;
    if (term * z / (1.0 - z) <= 0.5 * acc.rel_tol * sum) return sum;
    zk *= z;
  }
  throw ConvergenceError("bose_fn_series: term cap hit before the tolerance");
}

double bose_fn_integral(double nu, double z, const Accuracy& acc) {
  acc.validate();
  check_bose_domain(nu, z);
  if (z == 0.0) return 0.0;
  if (z == 1.0 && nu <= 1.0)
    throw DivergenceError("bose_fn: diverges for z = 1 when nu <= 1");

  // g_nu(z) = (1/Gamma(nu)) int_0^inf x^{nu-1} / (e^x/z - 1) dx. Near x = 0 the
  // integrand goes like x^{sigma-1} with sigma = nu for z < 1 and nu - 1 at
  // z = 1; substituting x = t^p with p >= 2/sigma makes it vanish at t = 0.
  const double sigma = (z == 1.0) ? nu - 1.0 : nu;
  const int p = std::max(1, static_cast<int>(std::ceil(2.0 / sigma)));
  const double x_max = 60.0 + 10.0 * nu;
  const double t_max = std::pow(x_max, 1.0 / p);

  auto integrand = [=](double t) {
    if (t <= 0.0) return 0.0;
    const double x = std::pow(t, p);
    // 1/(e^x/z - 1) = z / (expm1(x) + (1 - z)), stable for the whole range.
    const double occ = z / (std::expm1(x) + (1.0 - z));
    return p * std::pow(t, p * nu - 1.0) * occ;
  };

  const double quad_tol = std::max(0.2 * acc.rel_tol, 5e-14);
  const double integral = quad::integrate(integrand, 0.0, t_max, quad_tol);
  return integral / gamma_fn(nu);
}

double bose_fn(double nu, double z, const Accuracy& acc) {
  acc.validate();
  check_bose_domain(nu, z);
  if (z == 1.0) {
    if (nu <= 1.0)
      throw DivergenceError("bose_fn: diverges for z = 1 when nu <= 1");
    return riemann_zeta(nu);
  }
  return (z <= 0.99) ? bose_fn_series(nu, z, acc) : bose_fn_integral(nu, z, acc);
}

}  // namespace becshift
