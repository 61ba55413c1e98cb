#include "doctest.h"
#include "helpers.hpp"
#include "selinf/bootstrap.hpp"

#include <cmath>

using namespace selinf;

TEST_CASE("estimated_model_size implements the prefix rule") {
  CHECK(estimated_model_size({}, 0.05) == 0);
  CHECK(estimated_model_size({0.01, 0.02, 0.03}, 0.05) == 3);
  CHECK(estimated_model_size({0.01, 0.2, 0.01}, 0.05) == 1);
  CHECK(estimated_model_size({0.2, 0.01}, 0.05) == 0);
  CHECK(estimated_model_size({0.05}, 0.05) == 0); // strict inequality
}

TEST_CASE("bootstrap summary shape, determinism, and count monotonicity") {
  RngStream rng(41, 0);
  Dataset ds = testutil::random_dataset(rng, 60, 4);
  const BootstrapSummary a =
      run_bootstrap(ds, 25, 0.05, 8, LassoReference::f2_dferr, 11);
  REQUIRE(a.steps == 8);
  REQUIRE(a.cumulative_counts.size() == 8);
  REQUIRE(a.median_pvalues.size() == 8);
  for (int k = 1; k < 8; ++k)
    CHECK(a.cumulative_counts[k] <= a.cumulative_counts[k - 1]);
  for (const long c : a.cumulative_counts) {
    CHECK(c >= 0);
    CHECK(c <= 25);
  }
  // Steps beyond any realizable path length have no p-values.
  CHECK(std::isnan(a.median_pvalues[7]));

  const BootstrapSummary b =
      run_bootstrap(ds, 25, 0.05, 8, LassoReference::f2_dferr, 11);
  CHECK(a.cumulative_counts == b.cumulative_counts);
  for (int k = 0; k < 8; ++k) {
    const bool both_nan =
        std::isnan(a.median_pvalues[k]) && std::isnan(b.median_pvalues[k]);
    CHECK((both_nan || a.median_pvalues[k] == b.median_pvalues[k]));
  }
}

TEST_CASE("thread count does not change the summary") {
  RngStream rng(42, 0);
  Dataset ds = testutil::random_dataset(rng, 50, 3);
  const BootstrapSummary a =
      run_bootstrap(ds, 16, 0.05, 4, LassoReference::exp_mean_one, 5, 1);
  const BootstrapSummary b =
      run_bootstrap(ds, 16, 0.05, 4, LassoReference::exp_mean_one, 5, 3);
  CHECK(a.cumulative_counts == b.cumulative_counts);
  for (int k = 0; k < 4; ++k) {
    const bool both_nan =
        std::isnan(a.median_pvalues[k]) && std::isnan(b.median_pvalues[k]);
    CHECK((both_nan || a.median_pvalues[k] == b.median_pvalues[k]));
  }
}

TEST_CASE("B = 1 yields counts in {0, 1}") {
  RngStream rng(43, 0);
  Dataset ds = testutil::random_dataset(rng, 40, 3);
  const BootstrapSummary s =
      run_bootstrap(ds, 1, 0.05, 3, LassoReference::f2_dferr, 2);
  for (const long c : s.cumulative_counts) {
    CHECK(c >= 0);
    CHECK(c <= 1);
  }
}

TEST_CASE("different seeds give different resamples") {
  RngStream rng(44, 0);
  Dataset ds = testutil::random_dataset(rng, 60, 4);
  const BootstrapSummary a =
      run_bootstrap(ds, 40, 0.05, 4, LassoReference::f2_dferr, 1);
  const BootstrapSummary b =
      run_bootstrap(ds, 40, 0.05, 4, LassoReference::f2_dferr, 2);
  bool differs = a.cumulative_counts != b.cumulative_counts;
  for (int k = 0; k < 4 && !differs; ++k)
    differs = a.median_pvalues[k] != b.median_pvalues[k];
  CHECK(differs);
}
