#include "selinf/report.hpp"

#include <cmath>

namespace selinf {

namespace {

OutputTable::Cell opt_cell(const std::optional<double>& v) {
  if (!v) return std::monostate{};
  return *v;
}

} // namespace

OutputTable stepwise_report(const Dataset& ds, const StepwiseTable& table,
                            const MethodSet& methods) {
  std::vector<std::string> cols = {"step", "predictor", "t_stat"};
  if (methods.naive) cols.push_back("naive");
  if (methods.exact) cols.push_back("exact");
  if (methods.bonferroni) cols.push_back("bonferroni");
  if (methods.scheffe) cols.push_back("scheffe");
  if (methods.ftest) cols.push_back("ftest");
  if (methods.lemma2) cols.push_back("lemma2");
  OutputTable out(cols);
  for (const auto& rec : table.records) {
    std::vector<OutputTable::Cell> row = {std::to_string(rec.step),
                                          rec.selected_name, rec.t_selected};
    if (methods.naive) row.push_back(opt_cell(rec.p_naive));
    if (methods.exact) row.push_back(opt_cell(rec.p_exact));
    if (methods.bonferroni) row.push_back(opt_cell(rec.p_bonferroni));
    if (methods.scheffe) row.push_back(opt_cell(rec.p_scheffe));
    if (methods.ftest) row.push_back(opt_cell(rec.p_ftest));
    if (methods.lemma2) row.push_back(opt_cell(rec.p_lemma2));
    out.add_row(std::move(row));
  }
  return out;
}

OutputTable lasso_report(const Dataset& ds,
                         const std::vector<LassoStepPValue>& seq) {
  OutputTable out({"step", "variable", "lambda", "statistic", "p_value"});
  for (const auto& rec : seq) {
    out.add_row({std::to_string(rec.step),
                 ds.predictor_names[rec.variable], rec.knot,
                 opt_cell(rec.statistic), opt_cell(rec.p_value)});
  }
  return out;
}

OutputTable bootstrap_report(const BootstrapSummary& summary) {
  std::vector<std::string> cols = {"row"};
  for (int k = 1; k <= summary.steps; ++k)
    cols.push_back("step" + std::to_string(k));
  OutputTable out(cols);

  std::vector<OutputTable::Cell> counts = {std::string("cumulative_count")};
  for (const long c : summary.cumulative_counts)
    counts.push_back(std::to_string(c));
  out.add_row(std::move(counts));

  std::vector<OutputTable::Cell> medians = {std::string("median_pvalue")};
  for (const double m : summary.median_pvalues) {
    if (std::isnan(m)) medians.push_back(std::monostate{});
    else medians.push_back(m);
  }
  out.add_row(std::move(medians));
  return out;
}

OutputTable nullsim_report(const NullSimReport& rep) {
  OutputTable out({"design", "n", "p", "j", "rho", "replicates", "ks_distance",
                   "empirical_mean", "reference"});
  out.add_row({rep.design, std::to_string(rep.n), std::to_string(rep.p),
               std::to_string(rep.j), rep.rho, std::to_string(rep.replicates),
               rep.ks_distance, rep.empirical_mean, rep.reference});
  return out;
}

} // namespace selinf
