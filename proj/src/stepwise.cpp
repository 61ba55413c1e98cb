#include "selinf/stepwise.hpp"
#include "selinf/dists.hpp"
#include "selinf/error.hpp"
#include "selinf/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace selinf {

Selection select_next(const Dataset& ds, const ActiveSet& active,
                      const SigmaEstimate& sigma) {
  const ActiveBasis basis(ds, active);
  Selection sel;
  double best = -1.0;
  for (Eigen::Index j = 0; j < ds.p(); ++j) {
    if (active.contains(j)) continue;
    AdjustedPredictor adj = basis.residualize(ds, j);
    if (adj.norm <= kRankTol * adj.source_norm) continue; // collinear, skip
    const double t = t_statistic(adj, ds.y, sigma);
    sel.t_values[j] = t;
    if (std::fabs(t) > best) { // ties resolved by lowest index (map order)
      best = std::fabs(t);
      sel.j_star = j;
    }
  }
  if (sel.j_star < 0)
    throw Error("all remaining predictors are collinear with the active set");
  return sel;
}

double pvalue_naive(double t_max, const SigmaEstimate& sigma) {
  return t_survival_two_sided(t_max, static_cast<double>(sigma.df_err));
}

double pvalue_bonferroni(double p_naive, int m_remaining) {
  if (m_remaining < 1) throw Error("m_remaining must be >= 1");
  return std::min(1.0, m_remaining * p_naive);
}

double pvalue_scheffe(double t_max, int m_remaining, const SigmaEstimate& sigma) {
  if (m_remaining < 1) throw Error("m_remaining must be >= 1");
  return f_survival(t_max * t_max / m_remaining, m_remaining,
                    static_cast<double>(sigma.df_err));
}

double pvalue_ftest_remaining(const Dataset& ds, const ActiveSet& active,
                              const SigmaEstimate& sigma) {
  const int m = static_cast<int>(ds.p() - static_cast<Eigen::Index>(active.indices.size()));
  if (m < 1) throw Error("no remaining predictors for the F-test");
  const double rss_a = ActiveBasis(ds, active).rss(ds.y);
  const double rss_full =
      sigma.sigma_hat * sigma.sigma_hat * static_cast<double>(sigma.df_err);
  const double f = ((rss_a - rss_full) / m) / (sigma.sigma_hat * sigma.sigma_hat);
  return f_survival(f, m, static_cast<double>(sigma.df_err));
}

double pvalue_lemma2(double t_max, double t_second, const SigmaEstimate& sigma) {
  if (t_second > t_max) throw Error("lemma2: t_max must be >= t_second");
  const double s = t_max * (t_max - t_second);
  return f_survival(s, 2, static_cast<double>(sigma.df_err));
}

ExactPValue pvalue_exact(const Dataset& ds, const ActiveSet& active,
                         const SigmaEstimate& sigma, double t_max_obs,
                         long replicates, std::uint64_t seed,
                         std::uint64_t stream_base, int threads) {
  if (replicates < 1) throw Error("pvalue_exact: replicates must be >= 1");

  // Precompute unit adjusted predictors once per step, expressed in the
  // full-model basis: t^{(j)}(eps) = <u_j, eps> / sigma(eps) = <c_j, z> /
  // sigma(eps) with z = Q_full^T eps ~ N(0, I_{p+1}), independent of
  // RSS_full(eps) ~ chi^2_{df_err}.
  ActiveSet all;
  for (Eigen::Index j = 0; j < ds.p(); ++j) all.indices.push_back(j);
  const ActiveBasis full(ds, all);
  const ActiveBasis basis(ds, active);

  std::vector<Eigen::VectorXd> coords;
  for (Eigen::Index j = 0; j < ds.p(); ++j) {
    if (active.contains(j)) continue;
    AdjustedPredictor adj = basis.residualize(ds, j);
    if (adj.norm <= kRankTol * adj.source_norm) continue;
    coords.push_back(full.q().transpose() * (adj.values / adj.norm));
  }
  if (coords.empty()) throw Error("pvalue_exact: no usable remaining predictors");

  Eigen::MatrixXd c(static_cast<Eigen::Index>(coords.size()), full.q().cols());
  for (size_t i = 0; i < coords.size(); ++i)
    c.row(static_cast<Eigen::Index>(i)) = coords[i].transpose();

  const double dferr = static_cast<double>(sigma.df_err);
  std::vector<char> exceeds(static_cast<size_t>(replicates), 0);
  parallel_for_index(replicates, threads, [&](long b) {
    RngStream rng(seed, stream_base + static_cast<std::uint64_t>(b));
    Eigen::VectorXd z(c.cols());
    double sig = 0.0;
    for (int attempt = 0; attempt < 10; ++attempt) {
      for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
      sig = std::sqrt(rng.chisq(dferr) / dferr);
      if (sig > 1e-12) break;
    }
    if (sig <= 1e-12) throw Error("pvalue_exact: degenerate replicate sigma");
    const double tmax = (c * z).cwiseAbs().maxCoeff() / sig;
    if (tmax >= t_max_obs) exceeds[static_cast<size_t>(b)] = 1;
  });
  long exceed = 0;
  for (const char e : exceeds) exceed += e;

  ExactPValue out;
  out.p = static_cast<double>(1 + exceed) / static_cast<double>(replicates + 1);
  out.mc_se = std::sqrt(out.p * (1.0 - out.p) / static_cast<double>(replicates));
  return out;
}

StepwiseTable run_stepwise(const Dataset& ds, const MethodSet& methods,
                           long replicates, std::uint64_t seed, int threads) {
  ds.validate();
  if (methods.exact && replicates < 1)
    throw Error("exact method requested with replicates < 1");

  StepwiseTable table;
  table.sigma = sigma_full(ds);
  table.mc_replicates = methods.exact ? replicates : 0;
  table.seed = seed;

  const int p = static_cast<int>(ds.p());
  ActiveSet active;
  for (int k = 1; k <= p; ++k) {
    const Selection sel = select_next(ds, active, table.sigma);
    StepRecord rec;
    rec.step = k;
    rec.selected = sel.j_star;
    rec.selected_name = ds.predictor_names[sel.j_star];
    rec.t_selected = std::fabs(sel.t_values.at(sel.j_star));
    rec.m_remaining = p - (k - 1);

    const double naive = pvalue_naive(rec.t_selected, table.sigma);
    if (methods.naive) rec.p_naive = naive;
    if (methods.bonferroni)
      rec.p_bonferroni = pvalue_bonferroni(naive, rec.m_remaining);
    if (methods.scheffe)
      rec.p_scheffe = pvalue_scheffe(rec.t_selected, rec.m_remaining, table.sigma);
    if (methods.ftest)
      rec.p_ftest = pvalue_ftest_remaining(ds, active, table.sigma);
    if (methods.lemma2 && rec.m_remaining >= 2) {
      std::vector<double> mags;
      for (const auto& [j, t] : sel.t_values) mags.push_back(std::fabs(t));
      std::sort(mags.begin(), mags.end(), std::greater<>());
      rec.p_lemma2 = pvalue_lemma2(mags[0], mags[1], table.sigma);
    }
    if (methods.exact) {
      // Distinct stream block per step so step order never shifts the draws.
      const auto base = static_cast<std::uint64_t>(k - 1) *
                        static_cast<std::uint64_t>(replicates);
      const ExactPValue ex = pvalue_exact(ds, active, table.sigma,
                                          rec.t_selected, replicates, seed,
                                          base, threads);
      rec.p_exact = ex.p;
      rec.mc_se = ex.mc_se;
    }

    table.records.push_back(rec);
    active.indices.push_back(sel.j_star);
  }
  return table;
}

} // namespace selinf
