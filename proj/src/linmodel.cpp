#include "selinf/linmodel.hpp"
#include "selinf/error.hpp"

#include <algorithm>
#include <cmath>

namespace selinf {

bool ActiveSet::contains(Eigen::Index j) const {
  return std::find(indices.begin(), indices.end(), j) != indices.end();
}

namespace {

Eigen::MatrixXd design_with_intercept(const Dataset& ds,
                                      const std::vector<Eigen::Index>& cols) {
  Eigen::MatrixXd d(ds.n(), static_cast<Eigen::Index>(cols.size()) + 1);
  d.col(0).setOnes();
  for (size_t k = 0; k < cols.size(); ++k) d.col(static_cast<Eigen::Index>(k) + 1) = ds.X.col(cols[k]);
  return d;
}

// Householder QR with a rank check against kRankTol * largest column norm.
Eigen::MatrixXd thin_q(const Eigen::MatrixXd& d, const Dataset& ds,
                       const std::vector<Eigen::Index>& cols) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(d);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(d.cols()).triangularView<Eigen::Upper>();
  double max_col_norm = 0.0;
  for (Eigen::Index c = 0; c < d.cols(); ++c)
    max_col_norm = std::max(max_col_norm, d.col(c).norm());
  for (Eigen::Index c = 0; c < d.cols(); ++c) {
    if (std::fabs(r(c, c)) <= kRankTol * max_col_norm) {
      const std::string name = c == 0 ? std::string("intercept")
                                      : ds.predictor_names[cols[c - 1]];
      throw Error("design is rank deficient at column '" + name + "'");
    }
  }
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(d.rows(), d.cols());
  return qr.householderQ() * q;
}

} // namespace

ActiveBasis::ActiveBasis(const Dataset& ds, const ActiveSet& active) {
  q_ = thin_q(design_with_intercept(ds, active.indices), ds, active.indices);
}

Eigen::VectorXd ActiveBasis::project_out(const Eigen::VectorXd& v) const {
  return v - q_ * (q_.transpose() * v);
}

double ActiveBasis::rss(const Eigen::VectorXd& y) const {
  const double total = y.squaredNorm();
  const double fit = (q_.transpose() * y).squaredNorm();
  return std::max(0.0, total - fit);
}

AdjustedPredictor ActiveBasis::residualize(const Dataset& ds, Eigen::Index j) const {
  AdjustedPredictor adj;
  adj.source_index = j;
  adj.values = project_out(ds.X.col(j));
  adj.norm = adj.values.norm();
  adj.source_norm = ds.X.col(j).norm();
  return adj;
}

AdjustedPredictor residualize(const Dataset& ds, const ActiveSet& active,
                              Eigen::Index j) {
  if (j < 0 || j >= ds.p()) throw Error("predictor index out of range");
  if (active.contains(j))
    throw Error("predictor '" + ds.predictor_names[j] + "' is already active");
  return ActiveBasis(ds, active).residualize(ds, j);
}

SigmaEstimate sigma_full(const Dataset& ds) {
  ActiveSet all;
  for (Eigen::Index j = 0; j < ds.p(); ++j) all.indices.push_back(j);
  const ActiveBasis basis(ds, all);
  SigmaEstimate s;
  s.df_err = static_cast<long>(ds.n() - ds.p() - 1);
  if (s.df_err <= 0) throw Error("df_err <= 0: too few rows for the full model");
  const double rss = basis.rss(ds.y);
  s.sigma_hat = std::sqrt(rss / static_cast<double>(s.df_err));
  if (!(s.sigma_hat > 0.0))
    throw Error("full-model RSS is zero; sigma_hat is degenerate");
  return s;
}

double t_statistic(const AdjustedPredictor& adj, const Eigen::VectorXd& y,
                   const SigmaEstimate& sigma) {
  if (!(adj.norm > 0.0) || adj.norm <= kRankTol * adj.source_norm)
    throw Error("adjusted predictor has (near-)zero norm: collinear with active set");
  if (!(sigma.sigma_hat > 0.0)) throw Error("sigma_hat must be positive");
  return adj.values.dot(y) / (adj.norm * sigma.sigma_hat);
}

} // namespace selinf
