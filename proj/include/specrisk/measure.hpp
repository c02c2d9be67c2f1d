#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "specrisk/errors.hpp"
#include "specrisk/extended_real.hpp"

namespace specrisk {

namespace tol {
inline constexpr double atom_merge = 1e-12;    // alphas closer than this are one atom
inline constexpr double mass = 1e-12;          // exact-mass invariants
inline constexpr double weight_sum = 1e-9;     // user-facing renormalization window
inline constexpr double convexity = 1e-12;     // allowed negative slope jump
}  // namespace tol

/// Finite discrete probability measure on [0,1]: the representer mu in
/// rho(Z) = integral of CVaR_alpha(Z) d mu(alpha). Atoms are sorted by
/// alpha, alphas distinct, weights positive and summing to one.
class KusuokaMeasure {
 public:
  struct Atom {
    double alpha;
    double weight;
  };

  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Mass at alpha = 1 (zero if there is no such atom).
  double mass_at_one() const {
    const Atom& last = atoms_.back();
    return last.alpha == 1.0 ? last.weight : 0.0;
  }

  friend KusuokaMeasure make_kusuoka(std::vector<Atom> atoms);

 private:
  explicit KusuokaMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<Atom> atoms_;
};

/// Builds a KusuokaMeasure: sorts atoms, merges duplicate alphas (within
/// 1e-12) by summing weights, and renormalizes if the total mass is
/// within 1e-9 of one. Larger deviations are rejected.
inline KusuokaMeasure make_kusuoka(std::vector<KusuokaMeasure::Atom> atoms) {
  if (atoms.empty()) throw DomainError("kusuoka measure needs at least one atom");
  for (const auto& a : atoms) {
    if (!(a.alpha >= 0.0 && a.alpha <= 1.0) || !std::isfinite(a.alpha))
      throw DomainError("atom alpha " + std::to_string(a.alpha) + " outside [0,1]");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw DomainError("atom weight must be positive and finite");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.alpha < b.alpha; });

  std::vector<KusuokaMeasure::Atom> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && a.alpha - merged.back().alpha <= tol::atom_merge) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }

  double sum = 0.0;
  for (const auto& a : merged) sum += a.weight;
  if (std::abs(sum - 1.0) > tol::weight_sum)
    throw WeightSumError("atom weights sum to " + std::to_string(sum) + ", expected 1");
  for (auto& a : merged) a.weight /= sum;
  return KusuokaMeasure(std::move(merged));
}

/// Dirac measure at alpha: the Kusuoka representer of CVaR_alpha.
inline KusuokaMeasure cvar_measure(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("CVaR level " + std::to_string(alpha) + " outside [0,1]");
  return make_kusuoka({{alpha, 1.0}});
}

/// Convex piecewise-linear cdf w on [0,1] with w(0) = 0 and an optional
/// atom at 1 (jump w(1) - w(1-)). Breakpoints store w(1-) at t = 1; the
/// atom is kept separately so every integral has an exact per-segment
/// closed form.
class DualUtilityCdf {
 public:
  struct Breakpoint {
    double t;
    double w;
  };

  DualUtilityCdf(std::vector<Breakpoint> breakpoints, double atom_at_one)
      : breakpoints_(std::move(breakpoints)), atom_at_one_(atom_at_one) {
    validate();
  }

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  double atom_at_one() const { return atom_at_one_; }

  /// w(u) for u in [0,1]; the atom is included at u = 1, so value(1) = 1.
  double value(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("cdf argument outside [0,1]");
    if (u >= 1.0) return 1.0;
    auto it = std::upper_bound(
        breakpoints_.begin(), breakpoints_.end(), u,
        [](double x, const Breakpoint& b) { return x < b.t; });
    if (it == breakpoints_.begin()) return breakpoints_.front().w;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    return lo.w + (hi.w - lo.w) * (u - lo.t) / (hi.t - lo.t);
  }

  /// Slope of the j-th linear segment, j in [0, breakpoints().size()-2].
  double slope(std::size_t j) const {
    const Breakpoint& a = breakpoints_[j];
    const Breakpoint& b = breakpoints_[j + 1];
    return (b.w - a.w) / (b.t - a.t);
  }

  std::size_t segment_count() const { return breakpoints_.size() - 1; }

 private:
  void validate() const {
    if (breakpoints_.size() < 2)
      throw DomainError("dual utility cdf needs at least two breakpoints");
    if (std::abs(breakpoints_.front().t) > 0.0)
      throw DomainError("first breakpoint must be at t = 0");
    if (breakpoints_.back().t != 1.0)
      throw DomainError("last breakpoint must be at t = 1");
    if (std::abs(breakpoints_.front().w) > tol::mass)
      throw DomainError("w(0) must be 0");
    if (!(atom_at_one_ >= 0.0 && atom_at_one_ <= 1.0))
      throw DomainError("atom at 1 outside [0,1]");
    for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
      if (!(breakpoints_[j].t > breakpoints_[j - 1].t))
        throw DomainError("breakpoint abscissae must be strictly increasing");
    }
    if (std::abs(breakpoints_.back().w + atom_at_one_ - 1.0) > tol::mass)
      throw DomainError("w(1-) + atom must equal 1");
    double prev = 0.0;
    for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j) {
      double s = slope(j);
      if (s < -tol::convexity) throw DomainError("cdf must be nondecreasing");
      if (s - prev < -tol::convexity)
        throw ConvexityError("segment slopes must be nondecreasing");
      prev = s;
    }
  }

  std::vector<Breakpoint> breakpoints_;
  double atom_at_one_;
};

/// Slope of w at 1 from the left; +inf when there is an atom at 1.
inline ExtendedReal left_derivative_at_one(const DualUtilityCdf& w) {
  if (w.atom_at_one() > 0.0) return ExtendedReal::pos_inf();
  return w.slope(w.segment_count() - 1);
}

/// Dual utility cdf of the mixture: w(u) = sum over alpha_i < 1 of
/// lambda_i * max(0, (u - alpha_i) / (1 - alpha_i)); the mass at
/// alpha = 1 becomes the atom of w at 1.
inline DualUtilityCdf kusuoka_to_w(const KusuokaMeasure& mu) {
  std::vector<double> ts{0.0, 1.0};
  for (const auto& a : mu.atoms())
    if (a.alpha > 0.0 && a.alpha < 1.0) ts.push_back(a.alpha);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  // extended-precision accumulation: breakpoint values are differenced
  // later to recover slopes, so their rounding error must stay small
  // even when breakpoints are close together
  auto eval = [&](double u) {
    long double v = 0.0L;
    for (const auto& a : mu.atoms())
      if (a.alpha < 1.0 && u > a.alpha)
        v += static_cast<long double>(a.weight) * (u - a.alpha) / (1.0 - a.alpha);
    return static_cast<double>(v);
  };

  std::vector<DualUtilityCdf::Breakpoint> bps;
  bps.reserve(ts.size());
  for (double t : ts) bps.push_back({t, eval(t)});
  // Pin the endpoint mass exactly; eval(1) accumulates rounding.
  bps.back().w = 1.0 - mu.mass_at_one();
  return DualUtilityCdf(std::move(bps), mu.mass_at_one());
}

/// Inverts kusuoka_to_w: the slope jump Delta at an interior breakpoint t
/// carries mass Delta * (1 - t); the first slope is the mass at 0 and the
/// atom of w at 1 is the mass at 1.
inline KusuokaMeasure w_to_kusuoka(const DualUtilityCdf& w) {
  std::vector<KusuokaMeasure::Atom> atoms;
  double prev_slope = 0.0;
  for (std::size_t j = 0; j < w.segment_count(); ++j) {
    double t = w.breakpoints()[j].t;
    double jump = w.slope(j) - prev_slope;
    if (jump < -tol::convexity)
      throw ConvexityError("negative slope jump at t = " + std::to_string(t));
    double mass = jump * (1.0 - t);
    if (mass > 0.0) atoms.push_back({t, mass});
    prev_slope = w.slope(j);
  }
  if (w.atom_at_one() > 0.0) atoms.push_back({1.0, w.atom_at_one()});
  return make_kusuoka(std::move(atoms));
}

/// A spectral risk measure carried in either representation, converted
/// on demand. Immutable; cheap to copy.
class SpectralMeasure {
 public:
  explicit SpectralMeasure(KusuokaMeasure mu) : repr_(std::move(mu)) {}
  explicit SpectralMeasure(DualUtilityCdf w) : repr_(std::move(w)) {}

  bool holds_kusuoka() const { return std::holds_alternative<KusuokaMeasure>(repr_); }

  KusuokaMeasure as_kusuoka() const {
    if (const auto* mu = std::get_if<KusuokaMeasure>(&repr_)) return *mu;
    return w_to_kusuoka(std::get<DualUtilityCdf>(repr_));
  }

  DualUtilityCdf as_dual_utility() const {
    if (const auto* w = std::get_if<DualUtilityCdf>(&repr_)) return *w;
    return kusuoka_to_w(std::get<KusuokaMeasure>(repr_));
  }

 private:
  std::variant<KusuokaMeasure, DualUtilityCdf> repr_;
};

/// Convex combination of spectral risk measures in Kusuoka form: the
/// atom set is the union with linearly combined weights.
inline SpectralMeasure mix(const std::vector<SpectralMeasure>& measures,
                           const std::vector<double>& weights) {
  if (measures.empty() || measures.size() != weights.size())
    throw DomainError("mix needs matching nonempty measure and weight lists");
  double sum = 0.0;
  for (double lambda : weights) {
    if (lambda < 0.0) throw WeightSumError("mixture weights must be nonnegative");
    sum += lambda;
  }
  if (std::abs(sum - 1.0) > tol::weight_sum)
    throw WeightSumError("mixture weights sum to " + std::to_string(sum) + ", expected 1");

  std::vector<KusuokaMeasure::Atom> atoms;
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (weights[i] == 0.0) continue;
    KusuokaMeasure mu = measures[i].as_kusuoka();
    for (const auto& a : mu.atoms())
      atoms.push_back({a.alpha, weights[i] * a.weight});
  }
  return SpectralMeasure(make_kusuoka(std::move(atoms)));
}

}  // namespace specrisk
