#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "specrisk/degree.hpp"
#include "specrisk/errors.hpp"
#include "specrisk/measure.hpp"

namespace specrisk {

/// Sorted finite loss sample: the Z of rho(Z) through its empirical
/// quantile function (left-continuous step, value z_(k) on
/// ((k-1)/n, k/n]).
class EmpiricalSample {
 public:
  explicit EmpiricalSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw EmptySample("sample must be nonempty");
    for (double v : values_)
      if (!std::isfinite(v)) throw DomainError("sample values must be finite");
    std::sort(values_.begin(), values_.end());
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// rho(Z) for an empirical sample: sum over order statistics of
/// z_(k) * [w(k/n) - w((k-1)/n)]; the atom of w at 1 lands in the last
/// increment because w(1) = 1 includes it.
inline double rho_empirical(const SpectralMeasure& measure, const EmpiricalSample& sample) {
  DualUtilityCdf w = measure.as_dual_utility();
  const auto& z = sample.values();
  const double n = static_cast<double>(z.size());
  double total = 0.0;
  double w_prev = 0.0;
  for (std::size_t k = 1; k <= z.size(); ++k) {
    double w_k = w.value(static_cast<double>(k) / n);
    total += z[k - 1] * (w_k - w_prev);
    w_prev = w_k;
  }
  return total;
}

/// CVaR_alpha of an empirical sample; alpha = 0 is the mean, alpha = 1
/// the maximum.
inline double cvar_empirical(double alpha, const EmpiricalSample& sample) {
  return rho_empirical(SpectralMeasure(cvar_measure(alpha)), sample);
}

/// The one-parameter distribution family on which all equal-p-degree
/// measures agree: uniform at p = 1, exponential at p = 0, Pareto-type
/// tails for p < 0. Requires p > -1 so every CVaR stays finite.
class ZpFamily {
 public:
  ZpFamily(double p, double theta) : p_(p), theta_(theta) {
    if (!(p > -1.0)) throw DomainError("Z_p family requires p > -1");
    if (!(theta > 0.0)) throw DomainError("Z_p scale theta must be positive");
  }

  double p() const { return p_; }
  double theta() const { return theta_; }

 private:
  double p_;
  double theta_;
};

/// Quantile Phi_p(t) = (1 - (1-t)^p) / (theta p), log form at p = 0.
inline double zp_quantile(const ZpFamily& fam, double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    // at t = 1 the quantile is finite only for p > 0
    if (t == 1.0 && fam.p() > 0.0) return 1.0 / (fam.theta() * fam.p());
    throw DomainError("Z_p quantile argument outside [0,1)");
  }
  double l = std::log1p(-t);
  if (std::abs(fam.p()) < 1e-12) return -l / fam.theta();
  return -std::expm1(fam.p() * l) / (fam.theta() * fam.p());
}

/// cdf F_p(z) = 1 - (1 - theta p z)^(1/p) clamped to [0,1], exponential
/// form at p = 0; exact inverse of zp_quantile.
inline double zp_cdf(const ZpFamily& fam, double z) {
  if (z < 0.0) throw DomainError("Z_p is supported on [0,inf)");
  if (std::abs(fam.p()) < 1e-12) return -std::expm1(-fam.theta() * z);
  double base = 1.0 - fam.theta() * fam.p() * z;
  if (base <= 0.0) return fam.p() > 0.0 ? 1.0 : 0.0;  // p > 0: past the right endpoint
  double v = 1.0 - std::exp(std::log(base) / fam.p());
  return std::clamp(v, 0.0, 1.0);
}

/// CVaR_alpha(Z_p) in closed form:
/// (1 - (1-alpha)^p/(p+1)) / (theta p) for p != 0, (1 - log(1-alpha))/theta at p = 0.
inline double cvar_zp(const ZpFamily& fam, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw DomainError("CVaR of Z_p requires alpha in [0,1)");
  double l = std::log1p(-alpha);
  if (std::abs(fam.p()) < 1e-12) return (1.0 - l) / fam.theta();
  double q = fam.p() + 1.0;
  return (1.0 - std::exp(fam.p() * l) / q) / (fam.theta() * fam.p());
}

/// rho(Z_p) by mixing the closed-form CVaRs over the Kusuoka atoms.
/// Infinite when the measure loads the essential supremum (atom at 1),
/// since Z_p is unbounded.
inline double rho_zp(const SpectralMeasure& measure, const ZpFamily& fam) {
  KusuokaMeasure mu = measure.as_kusuoka();
  if (mu.mass_at_one() > 0.0)
    throw InfiniteRisk("measure loads alpha = 1 and Z_p is unbounded");
  double total = 0.0;
  for (const auto& a : mu.atoms()) total += a.weight * cvar_zp(fam, a.alpha);
  return total;
}

/// Side-by-side check that equal p-degrees imply equal risk on Z_p.
struct EquivalenceReport {
  double degree_a;
  double degree_b;
  double risk_a;
  double risk_b;
  bool degrees_equal;
  bool risks_equal;
  bool consistent;  // equal degrees imply equal risks at the scaled tolerance
};

inline EquivalenceReport check_equivalence(const SpectralMeasure& a,
                                           const SpectralMeasure& b,
                                           const ZpFamily& fam, double tolerance) {
  EquivalenceReport r;
  r.degree_a = degree(a, fam.p()).value;
  r.degree_b = degree(b, fam.p()).value;
  r.risk_a = rho_zp(a, fam);
  r.risk_b = rho_zp(b, fam);
  r.degrees_equal = std::abs(r.degree_a - r.degree_b) <= tolerance;
  // risks scale with the size of the CVaR curve, so widen by its magnitude
  double scale = std::max({1.0, std::abs(r.risk_a), std::abs(r.risk_b)});
  r.risks_equal = std::abs(r.risk_a - r.risk_b) <= tolerance * scale;
  r.consistent = !r.degrees_equal || r.risks_equal;
  return r;
}

}  // namespace specrisk
