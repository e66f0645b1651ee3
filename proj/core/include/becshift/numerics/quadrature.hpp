#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <becshift/errors.hpp>

// Globally adaptive Gauss-Kronrod 7/15 quadrature. The worst interval (largest
// error estimate) is bisected until the summed error meets the tolerance, so
// the subdivision order is a deterministic function of the integrand and the
// interval alone.

namespace becshift::quad {

namespace detail {

// Kronrod abscissae on [-1, 1] (positive half; the Gauss-7 points are the odd
// indices plus the midpoint) and the matching weights.
inline constexpr double kron_x[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kron_w[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double gauss_w[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelResult {
  double value;
  double error;
};

// One 15-point panel on [a, b] with the QUADPACK-style sharpened error bound.
template <class F>
PanelResult panel(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double flo[7], fhi[7];
  const double fc = f(mid);
  double kron = kron_w[7] * fc;
  double gauss = gauss_w[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kron_x[i];
    flo[i] = f(mid - dx);
    fhi[i] = f(mid + dx);
    const double pair = flo[i] + fhi[i];
    kron += kron_w[i] * pair;
    if (i % 2 == 1) gauss += gauss_w[(i - 1) / 2] * pair;
  }
  if (!std::isfinite(kron))
    throw DomainError("quadrature: integrand produced a non-finite value");

  const double mean = 0.5 * kron;  // kron is still on the [-1, 1] scale here
  double resasc = kron_w[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kron_w[i] * (std::abs(flo[i] - mean) + std::abs(fhi[i] - mean));
  resasc *= std::abs(half);

  const double value = kron * half;
  const double diff = std::abs((kron - gauss) * half);
  double err = diff;
  if (resasc != 0.0 && diff != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
  return {value, err};
}

struct Segment {
  double a, b, value, error;
};

}  // namespace detail

// Integrate f over [a, b] until sum of panel errors <= max(abs_tol, rel_tol*|I|).
// Throws AccuracyError (carrying the best estimate) if the panel budget runs out.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                 int max_panels = 4000) {
  if (a == b) return 0.0;
  if (!(a < b)) throw DomainError("quadrature: interval must satisfy a < b");
  if (!(rel_tol > 0.0) && !(abs_tol > 0.0))
    throw DomainError("quadrature: need a positive tolerance");

  auto by_error = [](const detail::Segment& s, const detail::Segment& t) {
    return s.error < t.error;
  };

  std::vector<detail::Segment> segs;
  segs.reserve(256);
  auto first = detail::panel(f, a, b);
  segs.push_back({a, b, first.value, first.error});
  double total = first.value;
  double total_err = first.error;

  int splits = 0;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (static_cast<int>(segs.size()) >= max_panels)
      throw AccuracyError("quadrature: panel budget exhausted", total);

    std::pop_heap(segs.begin(), segs.end(), by_error);
    detail::Segment worst = segs.back();
    segs.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      // Interval at machine width; accept its value and stop charging error.
      worst.error = 0.0;
      total_err = 0.0;
      for (const auto& s : segs) total_err += s.error;
      segs.push_back(worst);
      std::push_heap(segs.begin(), segs.end(), by_error);
      continue;
    }

    auto left = detail::panel(f, worst.a, mid);
    auto right = detail::panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    segs.push_back({worst.a, mid, left.value, left.error});
    std::push_heap(segs.begin(), segs.end(), by_error);
    segs.push_back({mid, worst.b, right.value, right.error});
    std::push_heap(segs.begin(), segs.end(), by_error);

    // Refresh the running sums now and then; incremental updates drift.
    if (++splits % 64 == 0) {
      total = 0.0;
      total_err = 0.0;
      for (const auto& s : segs) {
        total += s.value;
        total_err += s.error;
      }
    }
  }

  total = 0.0;
  for (const auto& s : segs) total += s.value;
  return total;
}

}  // namespace becshift::quad
