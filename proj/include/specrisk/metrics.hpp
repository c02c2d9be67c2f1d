#pragma once

#include "specrisk/measure.hpp"
#include "specrisk/stieltjes.hpp"

namespace specrisk {

/// Gini coefficient of the dual utility function: twice the area
/// between w and the diagonal, i.e. 1 - 2 * integral of w. Coincides
/// with the degree r_1.
inline double gini(const DualUtilityCdf& w) {
  return 1.0 - 2.0 * integrate_cdf(w);
}

/// Wasserstein-1 distance between the measure induced by w and the
/// uniform distribution on [0,1]. Convexity gives w(t) <= t pointwise,
/// so the cdf-difference integral needs no transport solver:
/// W_1 = integral of (t - w(t)) dt = 1/2 - integral of w.
inline double wasserstein1_to_uniform(const DualUtilityCdf& w) {
  return 0.5 - integrate_cdf(w);
}

}  // namespace specrisk
