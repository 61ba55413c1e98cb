#include "doctest.h"
#include "selinf/nullsim.hpp"

#include <cmath>

using namespace selinf;

TEST_CASE("spacing statistic at j = 1 is close to Exp(1)") {
  const NullSimReport rep = simulate_spacing_null(0, 200, 1, 4000, 0.0, 17);
  CHECK(rep.ks_distance < 0.035);
  CHECK(rep.empirical_mean == doctest::Approx(1.0).epsilon(0.1));
  CHECK(rep.design == "iid-z");
  CHECK(rep.replicates == 4000);
}

TEST_CASE("spacing means shrink like 1/j") {
  for (int j = 2; j <= 3; ++j) {
    const NullSimReport rep = simulate_spacing_null(0, 300, j, 4000, 0.0, 18);
    CHECK(rep.empirical_mean == doctest::Approx(1.0 / j).epsilon(0.2));
  }
}

TEST_CASE("equicorrelated designs degrade the exponential approximation") {
  // The rho > 0 branch exercises real designs; the law is only approximate,
  // so just require the report to be well formed and the KS finite.
  const NullSimReport rep = simulate_spacing_null(100, 30, 1, 300, 0.5, 19);
  CHECK(rep.rho == 0.5);
  CHECK(rep.ks_distance >= 0.0);
  CHECK(rep.ks_distance <= 1.0);
  CHECK(rep.empirical_mean > 0.0);
}

TEST_CASE("lemma-2 statistic matches F(2, n-p-1) on orthonormal designs") {
  const NullSimReport rep = simulate_lemma2_null(100, 20, 2000, 23);
  CHECK(rep.ks_distance < 0.06);
  CHECK(rep.reference.find("F(2") != std::string::npos);
}

TEST_CASE("selection null matches the closed-form max chi-square law") {
  const NullSimReport rep = simulate_selection_null(10, 10000, 29);
  CHECK(rep.ks_distance < 0.02);
  // E[max of 10 chi^2_1] is about 3.77.
  CHECK(rep.empirical_mean == doctest::Approx(3.77).epsilon(0.05));
}

TEST_CASE("simulations are seed-deterministic") {
  const NullSimReport a = simulate_selection_null(5, 2000, 7);
  const NullSimReport b = simulate_selection_null(5, 2000, 7);
  CHECK(a.ks_distance == b.ks_distance);
  CHECK(a.empirical_mean == b.empirical_mean);
}
