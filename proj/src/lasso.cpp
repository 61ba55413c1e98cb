#include "selinf/lasso.hpp"
#include "selinf/dists.hpp"
#include "selinf/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace selinf {

namespace {

struct Standardized {
  Eigen::MatrixXd x; // centered, unit Euclidean norm columns
  Eigen::VectorXd y; // centered
};

Standardized standardize(const Dataset& ds) {
  Standardized s;
  s.x = ds.X.rowwise() - ds.X.colwise().mean();
  for (Eigen::Index j = 0; j < s.x.cols(); ++j) {
    const double nrm = s.x.col(j).norm();
    if (nrm <= kRankTol * (1.0 + ds.X.col(j).norm()))
      throw Error("constant column '" + ds.predictor_names[j] +
                  "' cannot enter a lasso path");
    s.x.col(j) /= nrm;
  }
  s.y = ds.y.array() - ds.y.mean();
  return s;
}

} // namespace

Eigen::VectorXd LassoPath::coefficients_at(double lambda, Eigen::Index p) const {
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  for (const auto& seg : segments) {
    if (lambda <= seg.hi && lambda >= seg.lo) {
      for (size_t i = 0; i < seg.active.size(); ++i)
        beta(seg.active[i]) = seg.a(static_cast<Eigen::Index>(i)) -
                              lambda * seg.b(static_cast<Eigen::Index>(i));
      return beta;
    }
  }
  return beta; // above the first knot: all zero
}

LassoPath lars_path(const Dataset& ds) {
  const Standardized st = standardize(ds);
  const Eigen::Index p = st.x.cols();
  const Eigen::VectorXd xty = st.x.transpose() * st.y;

  LassoPath path;
  std::vector<Eigen::Index> active;
  std::vector<double> signs;

  // First entry at lambda_1 = max_j |<x_j, y>|.
  Eigen::Index j0 = 0;
  double lam = 0.0;
  for (Eigen::Index j = 0; j < p; ++j)
    if (std::fabs(xty(j)) > lam) { lam = std::fabs(xty(j)); j0 = j; }
  if (!(lam > 0.0)) throw Error("response is orthogonal to every predictor");

  path.knots.push_back(lam);
  path.events.push_back({lam, j0, true});
  active.push_back(j0);
  signs.push_back(xty(j0) >= 0 ? 1.0 : -1.0);
  path.active_sets.push_back(active);

  const double tol = 1e-10 * lam;
  const int max_events = 20 * static_cast<int>(p) + 20;

  while (static_cast<int>(path.events.size()) < max_events) {
    const auto m = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd xa(st.x.rows(), m);
    Eigen::VectorXd s(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      xa.col(i) = st.x.col(active[static_cast<size_t>(i)]);
      s(i) = signs[static_cast<size_t>(i)];
    }
    const Eigen::MatrixXd g = xa.transpose() * xa;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
    lu.setThreshold(kRankTol);
    if (lu.rank() < m) {
      // Stop the path here rather than continuing on a singular Gram matrix.
      break;
    }
    // KKT on the active set: beta(lambda) = a - lambda * b.
    const Eigen::VectorXd a = lu.solve(xa.transpose() * st.y);
    const Eigen::VectorXd b = lu.solve(s);

    // Next entering event: |c_j(lambda)| = lambda for some inactive j,
    // where c_j(lambda) = <x_j, y - xa beta(lambda)> is linear in lambda.
    double lam_enter = -1.0;
    Eigen::Index j_enter = -1;
    const Eigen::VectorXd xta = st.x.transpose() * (xa * a);
    const Eigen::VectorXd xtb = st.x.transpose() * (xa * b);
    for (Eigen::Index j = 0; j < p; ++j) {
      if (std::find(active.begin(), active.end(), j) != active.end()) continue;
      const double c0 = xty(j) - xta(j); // c_j(lambda) = c0 + lambda * c1
      const double c1 = xtb(j);
      for (const double sgn : {1.0, -1.0}) {
        const double denom = sgn - c1;
        if (std::fabs(denom) < 1e-14) continue;
        const double cand = c0 / denom;
        if (cand > tol && cand < lam - tol && cand > lam_enter) {
          lam_enter = cand;
          j_enter = j;
        }
      }
    }

    // Next drop event: an active coefficient hits zero.
    double lam_drop = -1.0;
    Eigen::Index i_drop = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (std::fabs(b(i)) < 1e-14) continue;
      const double cand = a(i) / b(i);
      if (cand > tol && cand < lam - tol && cand > lam_drop) {
        lam_drop = cand;
        i_drop = i;
      }
    }

    PathSegment seg;
    seg.hi = lam;
    seg.active = active;
    seg.a = a;
    seg.b = b;

    if (lam_enter < 0.0 && lam_drop < 0.0) {
      seg.lo = 0.0;
      path.segments.push_back(seg);
      break;
    }

    if (lam_drop > lam_enter) {
      lam = lam_drop;
      seg.lo = lam;
      path.segments.push_back(seg);
      const Eigen::Index var = active[static_cast<size_t>(i_drop)];
      path.knots.push_back(lam);
      path.events.push_back({lam, var, false});
      active.erase(active.begin() + i_drop);
      signs.erase(signs.begin() + i_drop);
    } else {
      lam = lam_enter;
      seg.lo = lam;
      path.segments.push_back(seg);
      path.knots.push_back(lam);
      path.events.push_back({lam, j_enter, true});
      // Sign of the correlation at entry.
      const double c_at = (xty(j_enter) - xta(j_enter)) + lam * xtb(j_enter);
      active.push_back(j_enter);
      signs.push_back(c_at >= 0 ? 1.0 : -1.0);
    }
    path.active_sets.push_back(active);
  }
  return path;
}

std::optional<double> knot_statistic(const LassoPath& path, int k,
                                     const SigmaEstimate& sigma) {
  if (k < 1 || static_cast<size_t>(k) > path.knots.size())
    throw Error("knot index out of range");
  if (static_cast<size_t>(k) == path.knots.size()) return std::nullopt;
  const double lk = path.knots[static_cast<size_t>(k - 1)];
  const double ln = path.knots[static_cast<size_t>(k)];
  const double s2 = sigma.sigma_hat * sigma.sigma_hat;
  return std::max(0.0, lk * (lk - ln)) / s2;
}

std::vector<LassoStepPValue> lasso_pvalue_sequence(const LassoPath& path,
                                                   const SigmaEstimate& sigma,
                                                   LassoReference reference) {
  std::vector<LassoStepPValue> out;
  int step = 0;
  for (size_t i = 0; i < path.events.size(); ++i) {
    if (!path.events[i].entering) continue;
    LassoStepPValue rec;
    rec.step = ++step;
    rec.variable = path.events[i].variable;
    rec.knot = path.events[i].lambda;
    rec.reference = reference;
    const auto stat = knot_statistic(path, static_cast<int>(i) + 1, sigma);
    if (stat) {
      rec.statistic = *stat;
      rec.p_value = reference == LassoReference::f2_dferr
                        ? f_survival(*stat, 2, static_cast<double>(sigma.df_err))
                        : ExpLaw{1.0}.survival(*stat);
    }
    out.push_back(rec);
  }
  return out;
}

std::vector<LassoStepPValue> lasso_pvalue_sequence(const Dataset& ds,
                                                   const SigmaEstimate& sigma,
                                                   LassoReference reference) {
  return lasso_pvalue_sequence(lars_path(ds), sigma, reference);
}

double rescale_statistic(double statistic, double multiplier) {
  if (multiplier < 1.0) throw Error("rescale multiplier must be >= 1");
  return statistic * multiplier;
}

} // namespace selinf
