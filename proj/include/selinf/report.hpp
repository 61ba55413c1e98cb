#ifndef SELINF_REPORT_HPP
#define SELINF_REPORT_HPP

#include "selinf/bootstrap.hpp"
#include "selinf/lasso.hpp"
#include "selinf/nullsim.hpp"
#include "selinf/stepwise.hpp"
#include "selinf/table.hpp"

namespace selinf {

OutputTable stepwise_report(const Dataset& ds, const StepwiseTable& table,
                            const MethodSet& methods);

OutputTable lasso_report(const Dataset& ds,
                         const std::vector<LassoStepPValue>& seq);

// Two data rows (cumulative counts, median p-values) over the reported steps.
OutputTable bootstrap_report(const BootstrapSummary& summary);

OutputTable nullsim_report(const NullSimReport& rep);

} // namespace selinf

#endif
