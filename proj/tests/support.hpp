#pragma once

// Shared generators and numerical oracles for the test suites. These
// stay independent of the closed-form code paths they check.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "specrisk/measure.hpp"

namespace testsupport {

struct MeasureOptions {
  int max_atoms = 20;
  bool allow_atom_at_one = false;
  double max_alpha = 0.99;   // upper bound for non-unit alphas
  double min_alpha_gap = 2e-3;  // keep atoms clearly distinct
};

inline specrisk::KusuokaMeasure random_kusuoka(std::mt19937_64& rng,
                                               MeasureOptions opt = {}) {
  std::uniform_int_distribution<int> n_dist(1, opt.max_atoms);
  std::uniform_real_distribution<double> alpha_dist(0.0, opt.max_alpha);
  std::uniform_real_distribution<double> weight_dist(0.05, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  int n = n_dist(rng);
  std::vector<specrisk::KusuokaMeasure::Atom> atoms;
  std::vector<double> alphas;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double alpha;
    if (opt.allow_atom_at_one && i == 0 && unit(rng) < 0.3) {
      alpha = 1.0;
    } else {
      bool distinct = false;
      do {
        alpha = alpha_dist(rng);
        distinct = true;
        for (double other : alphas)
          distinct = distinct && std::abs(alpha - other) >= opt.min_alpha_gap;
      } while (!distinct);
    }
    alphas.push_back(alpha);
    double w = weight_dist(rng);
    atoms.push_back({alpha, w});
    sum += w;
  }
  for (auto& a : atoms) a.weight /= sum;
  return specrisk::make_kusuoka(std::move(atoms));
}

inline specrisk::DualUtilityCdf random_dual_utility(std::mt19937_64& rng,
                                                    MeasureOptions opt = {}) {
  return specrisk::kusuoka_to_w(random_kusuoka(rng, opt));
}

// Composite midpoint rule for the Stieltjes integral of (1-t)^p
// against dw, one mesh per linear segment. Substituting u = (1-t)^beta
// with beta = min(1, (p+1)/3) turns the integrand into the smooth power
// s/beta * u^((p+1-beta)/beta) (exponent 2 whenever p < 2), so the rule
// keeps full second order through the singularity at t = 1. Only the
// transformed integrand is sampled; no antiderivative is used.
inline double midpoint_power_integral(const specrisk::DualUtilityCdf& w, double p,
                                      long total_points) {
  long per_segment =
      std::max<long>(10000, total_points / static_cast<long>(w.segment_count()));
  const double beta = std::min(1.0, (p + 1.0) / 3.0);
  const double exponent = (p + 1.0 - beta) / beta;
  double total = 0.0;
  for (std::size_t j = 0; j < w.segment_count(); ++j) {
    double a = w.breakpoints()[j].t;
    double b = w.breakpoints()[j + 1].t;
    double s = w.slope(j);
    double lo = std::pow(1.0 - b, beta);
    double hi = std::pow(1.0 - a, beta);
    double h = (hi - lo) / per_segment;
    double acc = 0.0;
    for (long k = 0; k < per_segment; ++k) {
      double u = lo + (static_cast<double>(k) + 0.5) * h;
      acc += std::pow(u, exponent);
    }
    total += (s / beta) * acc * h;
  }
  return total;
}

}  // namespace testsupport
