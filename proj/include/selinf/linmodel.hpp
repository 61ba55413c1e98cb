#ifndef SELINF_LINMODEL_HPP
#define SELINF_LINMODEL_HPP

#include "selinf/dataset.hpp"

#include <Eigen/Dense>
#include <vector>

namespace selinf {

// Ordered selection history; the intercept is implicit and always present.
struct ActiveSet {
  std::vector<Eigen::Index> indices;
  bool contains(Eigen::Index j) const;
};

struct SigmaEstimate {
  double sigma_hat = 0.0;
  long df_err = 0;
};

struct AdjustedPredictor {
  Eigen::VectorXd values; // X_j residualized on {1, X_a : a in active}
  double norm = 0.0;
  double source_norm = 0.0; // norm of the raw column, for collinearity checks
  Eigen::Index source_index = -1;
};

// Thin-Q factorization of [1 | X_active], reused to residualize many columns
// against the same active set.
class ActiveBasis {
public:
  ActiveBasis(const Dataset& ds, const ActiveSet& active);

  AdjustedPredictor residualize(const Dataset& ds, Eigen::Index j) const;
  Eigen::VectorXd project_out(const Eigen::VectorXd& v) const;
  double rss(const Eigen::VectorXd& y) const;
  const Eigen::MatrixXd& q() const { return q_; }

private:
  Eigen::MatrixXd q_; // n x (1 + |active|), orthonormal columns
};

AdjustedPredictor residualize(const Dataset& ds, const ActiveSet& active,
                              Eigen::Index j);

// sigma from the full-model RSS; this single estimate is reused at every
// selection step and never recomputed from a submodel.
SigmaEstimate sigma_full(const Dataset& ds);

double t_statistic(const AdjustedPredictor& adj, const Eigen::VectorXd& y,
                   const SigmaEstimate& sigma);

// Relative rank tolerance used when deciding a column is collinear with the
// active design.
inline constexpr double kRankTol = 1e-8;

} // namespace selinf

#endif
