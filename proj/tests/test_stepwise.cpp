#include "doctest.h"
#include "helpers.hpp"
#include "selinf/dists.hpp"
#include "selinf/stepwise.hpp"

#include <cmath>

using namespace selinf;

TEST_CASE("select_next picks the largest |t| and reports all candidates") {
  RngStream rng(21, 0);
  Dataset ds = testutil::random_dataset(rng, 50, 5);
  const SigmaEstimate sigma = sigma_full(ds);
  const Selection sel = select_next(ds, ActiveSet{}, sigma);
  REQUIRE(sel.t_values.size() == 5);
  double best = 0.0;
  for (const auto& [j, t] : sel.t_values) best = std::max(best, std::abs(t));
  CHECK(std::abs(sel.t_values.at(sel.j_star)) == doctest::Approx(best));
}

TEST_CASE("deterministic p-value formulas are mutually consistent") {
  const SigmaEstimate sigma{1.0, 200};
  const double t = 2.5;
  const int m = 7;
  const double naive = pvalue_naive(t, sigma);
  CHECK(naive == doctest::Approx(t_survival_two_sided(t, 200)).epsilon(1e-12));
  CHECK(pvalue_bonferroni(naive, m) == doctest::Approx(std::min(1.0, m * naive)));
  CHECK(pvalue_scheffe(t, m, sigma) ==
        doctest::Approx(f_survival(t * t / m, m, 200)).epsilon(1e-12));
  CHECK(pvalue_lemma2(t, 1.0, sigma) ==
        doctest::Approx(f_survival(2.5 * (2.5 - 1.0), 2, 200))
            .epsilon(1e-12));
}

TEST_CASE("orthonormal design: F of remaining variation equals sum t^2 / m") {
  // Columns from a QR factorization are exactly orthonormal and centered
  // against the intercept once we orthogonalize against the constant too.
  RngStream rng(22, 0);
  const Eigen::Index n = 40, p = 5;
  Eigen::MatrixXd raw(n, p + 1);
  raw.col(0).setOnes();
  for (Eigen::Index j = 1; j <= p; ++j)
    for (Eigen::Index i = 0; i < n; ++i) raw(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, p + 1);

  Dataset ds;
  ds.X = q.rightCols(p);
  ds.y = rng.normal_vector(n);
  for (Eigen::Index j = 0; j < p; ++j)
    ds.predictor_names.push_back("q" + std::to_string(j));
  ds.response_name = "y";

  const SigmaEstimate sigma = sigma_full(ds);
  const Selection sel = select_next(ds, ActiveSet{}, sigma);
  double sum_t2 = 0.0;
  for (const auto& [j, t] : sel.t_values) sum_t2 += t * t;
  const double p_f = pvalue_ftest_remaining(ds, ActiveSet{}, sigma);
  const double expect = f_survival(sum_t2 / p, p, sigma.df_err);
  CHECK(p_f == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("run_stepwise table structure and column filtering") {
  RngStream rng(23, 0);
  Dataset ds = testutil::random_dataset(rng, 60, 4);
  MethodSet m = MethodSet::none();
  m.naive = m.lemma2 = true;
  const StepwiseTable table = run_stepwise(ds, m, 0, 1);
  REQUIRE(table.records.size() == 4);
  for (size_t k = 0; k < 4; ++k) {
    const StepRecord& rec = table.records[k];
    CHECK(rec.step == static_cast<int>(k) + 1);
    CHECK(rec.m_remaining == 4 - static_cast<int>(k));
    CHECK(rec.p_naive.has_value());
    CHECK_FALSE(rec.p_exact.has_value());
    CHECK_FALSE(rec.p_scheffe.has_value());
    // Lemma 2 needs a runner-up, so the last step has no value.
    CHECK(rec.p_lemma2.has_value() == (k + 1 < 4));
  }
}

TEST_CASE("selected variables are never reselected") {
  RngStream rng(24, 0);
  Dataset ds = testutil::random_dataset(rng, 80, 6);
  const StepwiseTable table = run_stepwise(ds, MethodSet::none(), 0, 1);
  std::vector<bool> seen(6, false);
  for (const auto& rec : table.records) {
    CHECK_FALSE(seen[static_cast<size_t>(rec.selected)]);
    seen[static_cast<size_t>(rec.selected)] = true;
  }
}

TEST_CASE("exact p-value: add-one estimator bounds and determinism") {
  RngStream rng(25, 0);
  Dataset ds = testutil::random_dataset(rng, 40, 4, 0.0);
  const SigmaEstimate sigma = sigma_full(ds);
  const Selection sel = select_next(ds, ActiveSet{}, sigma);
  const double t_max = std::abs(sel.t_values.at(sel.j_star));
  const ExactPValue a = pvalue_exact(ds, ActiveSet{}, sigma, t_max, 499, 7, 0);
  const ExactPValue b = pvalue_exact(ds, ActiveSet{}, sigma, t_max, 499, 7, 0);
  CHECK(a.p == b.p);
  CHECK(a.p >= 1.0 / 500.0);
  CHECK(a.p <= 1.0);
  CHECK(a.mc_se > 0.0);
  // Thread count must not change the result.
  const ExactPValue c =
      pvalue_exact(ds, ActiveSet{}, sigma, t_max, 499, 7, 0, 4);
  CHECK(c.p == a.p);
}

TEST_CASE("exact p-value agrees with naive on a single-predictor problem") {
  // With m = 1 there is no selection effect, so exact ~ naive.
  RngStream rng(26, 0);
  Dataset ds = testutil::random_dataset(rng, 200, 1, 0.15);
  const SigmaEstimate sigma = sigma_full(ds);
  const Selection sel = select_next(ds, ActiveSet{}, sigma);
  const double t_max = std::abs(sel.t_values.at(sel.j_star));
  const double naive = pvalue_naive(t_max, sigma);
  const ExactPValue ex =
      pvalue_exact(ds, ActiveSet{}, sigma, t_max, 19999, 3, 0);
  CHECK(std::abs(ex.p - naive) < 0.02);
}

TEST_CASE("stepwise on wine reproduces the selection order") {
  Dataset ds = load_csv(testutil::wine_path(), "quality");
  MethodSet m = MethodSet::none();
  m.naive = true;
  const StepwiseTable table = run_stepwise(ds, m, 0, 1);
  REQUIRE(table.records.size() == 11);
  CHECK(table.records[0].selected_name == "alcohol");
  CHECK(table.records[1].selected_name == "volatile_acidity");
  CHECK(table.records[2].selected_name == "sulphates");
  CHECK(table.records[10].selected_name == "density");
  CHECK(table.sigma.df_err == 1587);
  CHECK(table.records[0].t_selected == doctest::Approx(23.7216).epsilon(1e-4));
}
