#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "specrisk/errors.hpp"
#include "specrisk/extended_real.hpp"
#include "specrisk/measure.hpp"
#include "specrisk/stieltjes.hpp"

namespace specrisk {

enum class DegreeBranch { generic, p_zero, p_minus_one, mu_formula };

inline const char* to_string(DegreeBranch b) {
  switch (b) {
    case DegreeBranch::generic: return "generic";
    case DegreeBranch::p_zero: return "p_zero";
    case DegreeBranch::p_minus_one: return "p_minus_one";
    default: return "mu_formula";
  }
}

/// Degree of risk aversion r_p together with the formula branch taken
/// and, when both formulas apply, the residual between them.
struct DegreeReport {
  double p;
  double value;  // in [0,1]
  DegreeBranch branch;
  std::optional<double> cross_residual;
};

namespace detail {
// |p| below this is the p = 0 (geometric mean / log) branch.
inline constexpr double p_zero_eps = 1e-12;
}  // namespace detail

/// p-generalized mean of 1 - alpha under mu. Conventions at an atom at
/// alpha = 1: (0)^p is 0 for p > 0 and +inf for p < 0, log 0 is -inf;
/// either way the mean itself is finite in [0,1] (an infinite term
/// drives it to 0 for p <= 0).
inline double generalized_mean(const KusuokaMeasure& mu, double p) {
  const bool mass_at_one = mu.mass_at_one() > 0.0;
  if (std::abs(p) < detail::p_zero_eps) {
    if (mass_at_one) return 0.0;
    double m = 0.0;
    for (const auto& a : mu.atoms()) m += a.weight * std::log1p(-a.alpha);
    return std::exp(m);
  }
  if (p < 0.0 && mass_at_one) return 0.0;
  double s = 0.0;
  for (const auto& a : mu.atoms()) {
    if (a.alpha == 1.0) continue;  // (1-1)^p = 0 for p > 0
    s += a.weight * std::exp(p * std::log1p(-a.alpha));
  }
  if (s <= 0.0) return 0.0;
  return std::exp(std::log(s) / p);
}

/// r_p via the Kusuoka representer: 1 minus the p-generalized mean of
/// 1 - alpha. Total for every real p.
inline double degree_from_mu(const KusuokaMeasure& mu, double p) {
  return std::clamp(1.0 - generalized_mean(mu, p), 0.0, 1.0);
}

/// r_p via the dual utility function, with its three branches:
/// generic p in (-1, inf) \ {0}, p = 0 (log form) and p = -1 (left
/// derivative at 1). p < -1 is rejected: the integral diverges there,
/// use degree_from_mu instead.
inline double degree_from_w(const DualUtilityCdf& w, double p) {
  if (std::abs(p + 1.0) < detail::p_zero_eps) {
    ExtendedReal d = left_derivative_at_one(w);
    double r = d.is_pos_inf() ? 1.0 : 1.0 - 1.0 / d.finite();
    return std::clamp(r, 0.0, 1.0);
  }
  if (p < -1.0)
    throw UnsupportedExponent("degree_from_w requires p >= -1");
  if (std::abs(p) < detail::p_zero_eps) {
    ExtendedReal integral = integrate_log(w);
    if (integral.is_neg_inf()) return 1.0;
    return std::clamp(1.0 - std::exp(integral.finite() + 1.0), 0.0, 1.0);
  }
  ExtendedReal integral = integrate_power(w, p);
  if (integral.is_pos_inf()) return 1.0;  // ((p+1) inf)^(1/p) = 0 for p < 0
  double s = (p + 1.0) * integral.finite();
  if (s <= 0.0) return 1.0;
  return std::clamp(1.0 - std::exp(std::log(s) / p), 0.0, 1.0);
}

/// Computes r_p, always through the Kusuoka formula (total for all p),
/// cross-checking against the dual-utility formula wherever the latter
/// is defined.
inline DegreeReport degree(const SpectralMeasure& measure, double p) {
  KusuokaMeasure mu = measure.as_kusuoka();
  DegreeReport report;
  report.p = p;
  report.value = degree_from_mu(mu, p);
  if (p < -1.0 - detail::p_zero_eps) {
    report.branch = DegreeBranch::mu_formula;
    return report;
  }
  if (std::abs(p + 1.0) < detail::p_zero_eps)
    report.branch = DegreeBranch::p_minus_one;
  else if (std::abs(p) < detail::p_zero_eps)
    report.branch = DegreeBranch::p_zero;
  else
    report.branch = DegreeBranch::generic;
  double via_w = degree_from_w(measure.as_dual_utility(), p);
  report.cross_residual = std::abs(report.value - via_w);
  return report;
}

/// The s_p transform: (1 - r_p)^p for p != 0, log(1 - r_p) at p = 0.
/// Infinite exactly when r_p = 1 and p <= 0.
inline ExtendedReal s_p_value(const SpectralMeasure& measure, double p) {
  // 1 - r_p is exactly the p-generalized mean, so work with the mean
  // directly instead of round-tripping through the degree; the detour
  // loses precision when r_p is close to 1.
  double mean = generalized_mean(measure.as_kusuoka(), p);
  if (std::abs(p) < detail::p_zero_eps) {
    if (mean <= 0.0) return ExtendedReal::neg_inf();
    return std::log(mean);
  }
  if (mean <= 0.0) {
    if (p > 0.0) return 0.0;
    return ExtendedReal::pos_inf();
  }
  return std::exp(p * std::log(mean));
}

/// The CVaR level alpha such that CVaR_alpha has the same p-degree as
/// the given measure; this is just r_p itself.
inline double equivalent_cvar(const SpectralMeasure& measure, double p) {
  return degree(measure, p).value;
}

/// h_p(alpha) = -((1-alpha)^p - 1)/p, with the log limit at p = 0.
inline std::vector<std::pair<double, double>> h_p_curve(
    double p, const std::vector<double>& alphas) {
  std::vector<std::pair<double, double>> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw DomainError("h_p argument outside [0,1]");
    if (alpha == 1.0 && p <= 0.0)
      throw DomainError("h_p is infinite at alpha = 1 for p <= 0");
    double h;
    if (std::abs(p) < detail::p_zero_eps)
      h = -std::log1p(-alpha);
    else
      h = -std::expm1(p * std::log1p(-alpha)) / p;
    out.emplace_back(alpha, h);
  }
  return out;
}

/// Degree of a law-invariant coherent risk measure given by a finite
/// Kusuoka family: the sup of the member degrees.
inline double coherent_degree(const std::vector<KusuokaMeasure>& family, double p) {
  if (family.empty()) throw EmptyFamily("coherent degree needs a nonempty family");
  double best = 0.0;
  for (const auto& mu : family) best = std::max(best, degree_from_mu(mu, p));
  return best;
}

}  // namespace specrisk
