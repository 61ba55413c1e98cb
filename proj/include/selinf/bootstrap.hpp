#ifndef SELINF_BOOTSTRAP_HPP
#define SELINF_BOOTSTRAP_HPP

#include "selinf/dataset.hpp"
#include "selinf/lasso.hpp"

#include <cstdint>
#include <vector>

namespace selinf {

struct BootstrapSummary {
  int steps = 0;
  std::vector<long> cumulative_counts;  // resamples whose p-value prefix < threshold
  std::vector<double> median_pvalues;   // per-step median across resamples
  long B = 0;
  double threshold = 0.05;
  std::uint64_t seed = 0;
  long degenerate_redraws = 0; // rank-deficient resamples that were redrawn
};

// Largest k such that pvalues[0..k-1] are all < threshold.
int estimated_model_size(const std::vector<double>& pvalues, double threshold);

BootstrapSummary run_bootstrap(const Dataset& ds, long B, double threshold,
                               int steps, LassoReference reference,
                               std::uint64_t seed, int threads = 1);

} // namespace selinf

#endif
