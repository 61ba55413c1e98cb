#ifndef SELINF_STEPWISE_HPP
#define SELINF_STEPWISE_HPP

#include "selinf/dataset.hpp"
#include "selinf/linmodel.hpp"
#include "selinf/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace selinf {

enum class Method { naive, exact, bonferroni, scheffe, ftest, lemma2 };

struct MethodSet {
  bool naive = true, exact = true, bonferroni = true, scheffe = true,
       ftest = true, lemma2 = true;
  static MethodSet all() { return {}; }
  static MethodSet none() { return {false, false, false, false, false, false}; }
};

struct StepRecord {
  int step = 0;
  Eigen::Index selected = -1;
  std::string selected_name;
  double t_selected = 0.0; // |t| of the chosen variable
  int m_remaining = 0;     // p - (k - 1)
  std::optional<double> p_naive, p_exact, p_bonferroni, p_scheffe, p_ftest,
      p_lemma2;
  double mc_se = 0.0; // Monte Carlo standard error of p_exact
};

struct StepwiseTable {
  std::vector<StepRecord> records;
  SigmaEstimate sigma;
  long mc_replicates = 0;
  std::uint64_t seed = 0;
};

struct Selection {
  Eigen::Index j_star = -1;
  std::map<Eigen::Index, double> t_values; // signed t for every remaining j
};

Selection select_next(const Dataset& ds, const ActiveSet& active,
                      const SigmaEstimate& sigma);

double pvalue_naive(double t_max, const SigmaEstimate& sigma);
double pvalue_bonferroni(double p_naive, int m_remaining);
double pvalue_scheffe(double t_max, int m_remaining, const SigmaEstimate& sigma);
double pvalue_ftest_remaining(const Dataset& ds, const ActiveSet& active,
                              const SigmaEstimate& sigma);
double pvalue_lemma2(double t_max, double t_second, const SigmaEstimate& sigma);

struct ExactPValue {
  double p = 1.0;
  double mc_se = 0.0;
};

// Monte Carlo max-|t| test: the null replicates are pure-noise responses, with
// sigma re-estimated from each replicate's full-model residuals. The noise is
// sampled through its sufficient statistics -- coordinates in the full-model
// column basis plus an independent chi-square residual RSS -- which has the
// same joint law as projecting a fresh N(0, I_n) vector.
ExactPValue pvalue_exact(const Dataset& ds, const ActiveSet& active,
                         const SigmaEstimate& sigma, double t_max_obs,
                         long replicates, std::uint64_t seed,
                         std::uint64_t stream_base, int threads = 1);

StepwiseTable run_stepwise(const Dataset& ds, const MethodSet& methods,
                           long replicates, std::uint64_t seed,
                           int threads = 1);

} // namespace selinf

#endif
