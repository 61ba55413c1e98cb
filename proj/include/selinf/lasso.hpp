#ifndef SELINF_LASSO_HPP
#define SELINF_LASSO_HPP

#include "selinf/dataset.hpp"
#include "selinf/linmodel.hpp"

#include <optional>
#include <vector>

namespace selinf {

enum class LassoReference { f2_dferr, exp_mean_one };

struct PathEvent {
  double lambda = 0.0;
  Eigen::Index variable = -1;
  bool entering = true;
};

// On [lo, hi] the active-set coefficients are beta(lambda) = a - lambda * b.
struct PathSegment {
  double hi = 0.0, lo = 0.0;
  std::vector<Eigen::Index> active;
  Eigen::VectorXd a, b;
};

// Piecewise-linear lasso solution path on internally centered, unit-norm
// columns; knots are reported on that scale.
struct LassoPath {
  std::vector<double> knots; // one per event, decreasing
  std::vector<PathEvent> events;
  std::vector<std::vector<Eigen::Index>> active_sets; // after each event
  std::vector<PathSegment> segments;

  // Full-length coefficient vector (unit-column scale) at a penalty value.
  Eigen::VectorXd coefficients_at(double lambda, Eigen::Index p) const;
};

LassoPath lars_path(const Dataset& ds);

// Spacing statistic lambda_k (lambda_k - lambda_{k+1}) / sigma^2 for the k-th
// knot (1-based); absent when the knot has no successor.
std::optional<double> knot_statistic(const LassoPath& path, int k,
                                     const SigmaEstimate& sigma);

struct LassoStepPValue {
  int step = 0; // entering-step counter, 1-based
  Eigen::Index variable = -1;
  double knot = 0.0;
  std::optional<double> statistic;
  std::optional<double> p_value;
  LassoReference reference = LassoReference::f2_dferr;
};

std::vector<LassoStepPValue> lasso_pvalue_sequence(const LassoPath& path,
                                                   const SigmaEstimate& sigma,
                                                   LassoReference reference);

std::vector<LassoStepPValue> lasso_pvalue_sequence(const Dataset& ds,
                                                   const SigmaEstimate& sigma,
                                                   LassoReference reference);

double rescale_statistic(double statistic, double multiplier);

} // namespace selinf

#endif
