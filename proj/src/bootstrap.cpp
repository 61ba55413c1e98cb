#include "selinf/bootstrap.hpp"
#include "selinf/error.hpp"
#include "selinf/parallel.hpp"
#include "selinf/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace selinf {

int estimated_model_size(const std::vector<double>& pvalues, double threshold) {
  int k = 0;
  for (const double p : pvalues) {
    if (!(p < threshold)) break;
    ++k;
  }
  return k;
}

namespace {

Dataset resample_rows(const Dataset& ds, RngStream& rng) {
  const auto n = static_cast<std::uint64_t>(ds.n());
  Dataset out;
  out.predictor_names = ds.predictor_names;
  out.response_name = ds.response_name;
  out.X.resize(ds.n(), ds.p());
  out.y.resize(ds.n());
  for (Eigen::Index i = 0; i < ds.n(); ++i) {
    const auto r = static_cast<Eigen::Index>(rng.next_u64() % n);
    out.X.row(i) = ds.X.row(r);
    out.y(i) = ds.y(r);
  }
  return out;
}

} // namespace

BootstrapSummary run_bootstrap(const Dataset& ds, long B, double threshold,
                               int steps, LassoReference reference,
                               std::uint64_t seed, int threads) {
  if (B < 1) throw Error("run_bootstrap: B must be >= 1");
  if (steps < 1) throw Error("run_bootstrap: steps must be >= 1");
  ds.validate();

  BootstrapSummary out;
  out.steps = steps;
  out.B = B;
  out.threshold = threshold;
  out.seed = seed;
  out.cumulative_counts.assign(static_cast<size_t>(steps), 0);

  constexpr int kMaxRetries = 16;
  std::vector<std::vector<double>> pseqs(static_cast<size_t>(B));
  std::vector<long> redraws(static_cast<size_t>(B), 0);

  parallel_for_index(B, threads, [&](long b) {
    std::vector<double>& pseq = pseqs[static_cast<size_t>(b)];
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) {
      // Retries get their own stream block so resample b stays reproducible.
      RngStream rng(seed, static_cast<std::uint64_t>(b) +
                              static_cast<std::uint64_t>(attempt) * (1ULL << 40));
      Dataset rs = resample_rows(ds, rng);
      try {
        const SigmaEstimate sig = sigma_full(rs);
        const auto seq = lasso_pvalue_sequence(rs, sig, reference);
        pseq.clear();
        for (const auto& rec : seq)
          if (rec.p_value) pseq.push_back(*rec.p_value);
        ok = true;
      } catch (const Error&) {
        ++redraws[static_cast<size_t>(b)];
      }
    }
    if (!ok) throw Error("bootstrap resample " + std::to_string(b) +
                         " stayed rank deficient after retries");
  });

  std::vector<std::vector<double>> per_step(static_cast<size_t>(steps));
  for (long b = 0; b < B; ++b) {
    const auto& pseq = pseqs[static_cast<size_t>(b)];
    out.degenerate_redraws += redraws[static_cast<size_t>(b)];
    const int size = estimated_model_size(pseq, threshold);
    for (int k = 0; k < steps; ++k) {
      if (size >= k + 1) ++out.cumulative_counts[static_cast<size_t>(k)];
      if (static_cast<size_t>(k) < pseq.size())
        per_step[static_cast<size_t>(k)].push_back(pseq[static_cast<size_t>(k)]);
    }
  }

  out.median_pvalues.resize(static_cast<size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    auto& v = per_step[static_cast<size_t>(k)];
    if (v.empty()) {
      out.median_pvalues[static_cast<size_t>(k)] =
          std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    std::sort(v.begin(), v.end());
    const size_t m = v.size();
    out.median_pvalues[static_cast<size_t>(k)] =
        m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
  }
  return out;
}

} // namespace selinf
