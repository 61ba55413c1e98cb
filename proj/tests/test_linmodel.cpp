#include "doctest.h"
#include "helpers.hpp"
#include "selinf/error.hpp"
#include "selinf/linmodel.hpp"

#include <cmath>

using namespace selinf;

namespace {

// Normal-equations OLS oracle: t-statistic of the last column of [1|Xa|xj]
// with a supplied noise scale.
double ols_t_oracle(const Dataset& ds, const ActiveSet& active,
                    Eigen::Index j, const SigmaEstimate& sigma) {
  const Eigen::Index n = ds.n();
  const Eigen::Index k = static_cast<Eigen::Index>(active.indices.size());
  Eigen::MatrixXd M(n, k + 2);
  M.col(0).setOnes();
  for (Eigen::Index a = 0; a < k; ++a) M.col(a + 1) = ds.X.col(active.indices[a]);
  M.col(k + 1) = ds.X.col(j);
  const Eigen::MatrixXd G = (M.transpose() * M).inverse();
  const Eigen::VectorXd beta = G * (M.transpose() * ds.y);
  const double se = sigma.sigma_hat * std::sqrt(G(k + 1, k + 1));
  return beta(k + 1) / se;
}

} // namespace

TEST_CASE("residualized predictors are orthogonal to the active design") {
  RngStream rng(3, 0);
  Dataset ds = testutil::random_dataset(rng, 40, 6);
  ActiveSet active{{1, 4}};
  const AdjustedPredictor adj = residualize(ds, active, 2);
  CHECK(std::abs(adj.values.sum()) < 1e-9);
  CHECK(std::abs(adj.values.dot(ds.X.col(1))) < 1e-8);
  CHECK(std::abs(adj.values.dot(ds.X.col(4))) < 1e-8);
  CHECK(adj.norm == doctest::Approx(adj.values.norm()));
  CHECK(adj.source_index == 2);
}

TEST_CASE("sigma_full matches the direct least-squares residual") {
  RngStream rng(4, 0);
  Dataset ds = testutil::random_dataset(rng, 60, 5);
  const SigmaEstimate s = sigma_full(ds);
  CHECK(s.df_err == 60 - 5 - 1);
  Eigen::MatrixXd M(60, 6);
  M.col(0).setOnes();
  M.rightCols(5) = ds.X;
  const Eigen::VectorXd r = ds.y - M * M.colPivHouseholderQr().solve(ds.y);
  CHECK(s.sigma_hat ==
        doctest::Approx(std::sqrt(r.squaredNorm() / s.df_err)).epsilon(1e-10));
}

TEST_CASE("t_statistic equals the normal-equations oracle on random instances") {
  RngStream rng(7, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index n = 15 + static_cast<Eigen::Index>(rng.uniform01() * 15);
    const Eigen::Index p = 2 + static_cast<Eigen::Index>(rng.uniform01() * 4);
    Dataset ds = testutil::random_dataset(rng, n, p);
    const SigmaEstimate sigma = sigma_full(ds);
    ActiveSet active;
    if (p > 2) active.indices.push_back(0);
    for (Eigen::Index j = active.indices.size(); j < p; ++j) {
      const AdjustedPredictor adj = residualize(ds, active, j);
      const double t = t_statistic(adj, ds.y, sigma);
      const double oracle = ols_t_oracle(ds, active, j, sigma);
      CHECK(t == doctest::Approx(oracle).epsilon(1e-8));
    }
  }
}

TEST_CASE("rank-deficient active design names the offending column") {
  RngStream rng(8, 0);
  Dataset ds = testutil::random_dataset(rng, 30, 4);
  ds.X.col(3) = 2.0 * ds.X.col(1);
  ActiveSet active{{1, 3}};
  CHECK_THROWS_WITH_AS(ActiveBasis(ds, active), doctest::Contains("x3"), Error);
}

TEST_CASE("residualizing a collinear column yields a guarded t_statistic") {
  RngStream rng(9, 0);
  Dataset ds = testutil::random_dataset(rng, 30, 4);
  ds.X.col(3) = -0.5 * ds.X.col(1);
  const SigmaEstimate sigma{1.0, 25};
  ActiveSet active{{1}};
  const AdjustedPredictor adj = residualize(ds, active, 3);
  CHECK(adj.norm < 1e-8 * adj.source_norm);
  CHECK_THROWS_AS(t_statistic(adj, ds.y, sigma), Error);
}

TEST_CASE("rss decreases as the active set grows") {
  RngStream rng(10, 0);
  Dataset ds = testutil::random_dataset(rng, 50, 5);
  double prev = ActiveBasis(ds, ActiveSet{}).rss(ds.y);
  for (Eigen::Index j = 0; j < 5; ++j) {
    ActiveSet active;
    for (Eigen::Index a = 0; a <= j; ++a) active.indices.push_back(a);
    const double cur = ActiveBasis(ds, active).rss(ds.y);
    CHECK(cur <= prev + 1e-9);
    prev = cur;
  }
}

TEST_CASE("df_err guard rejects datasets with too few rows") {
  Dataset ds;
  ds.X = Eigen::MatrixXd::Random(4, 3);
  ds.y = Eigen::VectorXd::Random(4);
  ds.predictor_names = {"a", "b", "c"};
  CHECK_THROWS_AS(sigma_full(ds), Error);
}
