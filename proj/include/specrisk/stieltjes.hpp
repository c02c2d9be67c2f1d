#pragma once

#include <cmath>

#include "specrisk/errors.hpp"
#include "specrisk/extended_real.hpp"
#include "specrisk/measure.hpp"

namespace specrisk {

namespace detail {

// (1-a)^q - (1-b)^q for 0 <= a < b <= 1, q > 0, computed through
// log1p/expm1 so the difference stays accurate as q -> 0.
inline double one_minus_pow_diff(double a, double b, double q) {
  double la = std::log1p(-a);  // log(1-a)
  if (b >= 1.0) return std::exp(q * la);
  double lb = std::log1p(-b);
  return std::exp(q * lb) * std::expm1(q * (la - lb));
}

}  // namespace detail

/// Integral of (1-t)^p against dw, exact per linear segment via the
/// (1-t)^(p+1)/(p+1) antiderivative. An atom of w at 1 contributes
/// nothing for p > 0 and makes the integral +inf for p < 0. Requires
/// p > -1 (the integral diverges otherwise) and |p| >= 1e-12 (callers
/// must use the log form at p = 0).
inline ExtendedReal integrate_power(const DualUtilityCdf& w, double p) {
  if (!(p > -1.0))
    throw UnsupportedExponent("integrate_power requires p > -1");
  if (std::abs(p) < 1e-12)
    throw UnsupportedExponent("p = 0 must go through integrate_log");
  if (w.atom_at_one() > 0.0 && p < 0.0) return ExtendedReal::pos_inf();

  const double q = p + 1.0;
  double total = 0.0;
  for (std::size_t j = 0; j < w.segment_count(); ++j) {
    double a = w.breakpoints()[j].t;
    double b = w.breakpoints()[j + 1].t;
    total += w.slope(j) * detail::one_minus_pow_diff(a, b, q) / q;
  }
  return total;
}

/// Integral of log(1-t) against dw; -inf when w has an atom at 1.
inline ExtendedReal integrate_log(const DualUtilityCdf& w) {
  if (w.atom_at_one() > 0.0) return ExtendedReal::neg_inf();
  // antiderivative of log(1-t): -(1-t)(log(1-t) - 1), -> 0 as t -> 1
  auto F = [](double t) {
    if (t >= 1.0) return 0.0;
    double l = std::log1p(-t);
    return -(1.0 - t) * (l - 1.0);
  };
  double total = 0.0;
  for (std::size_t j = 0; j < w.segment_count(); ++j) {
    double a = w.breakpoints()[j].t;
    double b = w.breakpoints()[j + 1].t;
    total += w.slope(j) * (F(b) - F(a));
  }
  return total;
}

/// Integral of t against dw; the atom at 1 contributes its full mass.
inline double integrate_identity(const DualUtilityCdf& w) {
  double total = w.atom_at_one();
  for (std::size_t j = 0; j < w.segment_count(); ++j) {
    double a = w.breakpoints()[j].t;
    double b = w.breakpoints()[j + 1].t;
    total += w.slope(j) * 0.5 * (b * b - a * a);
  }
  return total;
}

/// Area under the piecewise-linear w on [0,1]; the atom at 1 has zero
/// width and contributes nothing.
inline double integrate_cdf(const DualUtilityCdf& w) {
  double total = 0.0;
  for (std::size_t j = 0; j < w.segment_count(); ++j) {
    const auto& a = w.breakpoints()[j];
    const auto& b = w.breakpoints()[j + 1];
    total += 0.5 * (a.w + b.w) * (b.t - a.t);
  }
  return total;
}

}  // namespace specrisk
