#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "specrisk/stieltjes.hpp"
#include "support.hpp"

using namespace specrisk;

namespace {
DualUtilityCdf diagonal() { return DualUtilityCdf({{0.0, 0.0}, {1.0, 1.0}}, 0.0); }
DualUtilityCdf w_half() { return kusuoka_to_w(cvar_measure(0.5)); }
}  // namespace

TEST_CASE("integrate_power closed forms") {
  CHECK(integrate_power(diagonal(), 1.0).finite() == Catch::Approx(0.5));
  CHECK(integrate_power(w_half(), 1.0).finite() == Catch::Approx(0.25));
  // frozen from sqrt(0.5)/1.5; cross-checked against the midpoint oracle below
  CHECK(integrate_power(w_half(), 0.5).finite() ==
        Catch::Approx(0.4714045207910317).epsilon(1e-12));

  SECTION("atom at 1 diverges for negative p") {
    DualUtilityCdf w({{0.0, 0.0}, {1.0, 0.7}}, 0.3);
    CHECK(integrate_power(w, -0.5).is_pos_inf());
    CHECK(integrate_power(w, 1.0).finite() == Catch::Approx(0.7 * 0.5));
  }
  SECTION("rejected exponents") {
    CHECK_THROWS_AS(integrate_power(diagonal(), -1.0), UnsupportedExponent);
    CHECK_THROWS_AS(integrate_power(diagonal(), -2.0), UnsupportedExponent);
    CHECK_THROWS_AS(integrate_power(diagonal(), 1e-13), UnsupportedExponent);
  }
}

TEST_CASE("integrate_log closed forms") {
  CHECK(integrate_log(diagonal()).finite() == Catch::Approx(-1.0));
  CHECK(integrate_log(w_half()).finite() == Catch::Approx(std::log(0.5) - 1.0));
  DualUtilityCdf w({{0.0, 0.0}, {1.0, 0.8}}, 0.2);
  CHECK(integrate_log(w).is_neg_inf());
}

TEST_CASE("integrate_identity closed forms") {
  CHECK(integrate_identity(diagonal()) == Catch::Approx(0.5));
  CHECK(integrate_identity(w_half()) == Catch::Approx(0.75));
  DualUtilityCdf ess_sup({{0.0, 0.0}, {1.0, 0.0}}, 1.0);
  CHECK(integrate_identity(ess_sup) == Catch::Approx(1.0));
}

TEST_CASE("integrate_cdf closed forms") {
  CHECK(integrate_cdf(diagonal()) == Catch::Approx(0.5));
  CHECK(integrate_cdf(w_half()) == Catch::Approx(0.25));
  DualUtilityCdf ess_sup({{0.0, 0.0}, {1.0, 0.0}}, 1.0);
  CHECK(integrate_cdf(ess_sup) == 0.0);
}

TEST_CASE("integration by parts: int t dw + int w dt = 1") {
  std::mt19937_64 rng(123);
  testsupport::MeasureOptions opt;
  opt.allow_atom_at_one = true;
  for (int trial = 0; trial < 200; ++trial) {
    auto w = testsupport::random_dual_utility(rng, opt);
    CHECK(std::abs(integrate_identity(w) + integrate_cdf(w) - 1.0) <= 1e-12);
  }
}

TEST_CASE("integrate_power at p = 1 matches 1 - int t dw") {
  std::mt19937_64 rng(456);
  testsupport::MeasureOptions opt;
  opt.allow_atom_at_one = true;
  for (int trial = 0; trial < 200; ++trial) {
    auto w = testsupport::random_dual_utility(rng, opt);
    double lhs = integrate_power(w, 1.0).finite() + w.atom_at_one() * 0.0;
    CHECK(std::abs(lhs - (1.0 - integrate_identity(w))) <= 1e-12);
  }
}

TEST_CASE("integrate_power agrees with the midpoint-rule oracle") {
  std::mt19937_64 rng(789);
  std::uniform_real_distribution<double> p_dist(-0.9, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = testsupport::random_dual_utility(rng);  // no atom at 1
    double p = p_dist(rng);
    if (std::abs(p) < 1e-3) p = 0.5;
    double oracle = testsupport::midpoint_power_integral(w, p, 1000000);
    CHECK(integrate_power(w, p).finite() == Catch::Approx(oracle).margin(1e-6));
  }
}
