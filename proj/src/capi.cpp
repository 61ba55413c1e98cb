#include "selinf.h"

#include "selinf/dataset.hpp"
#include "selinf/error.hpp"
#include "selinf/parallel.hpp"
#include "selinf/report.hpp"

#include <cstring>
#include <string>

struct slf_dataset {
  selinf::Dataset ds;
};

struct slf_table {
  selinf::OutputTable table;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
int guarded(slf_table** out, Fn&& fn) {
  if (out == nullptr) return fail(SLF_ERR_USAGE, "null output pointer");
  *out = nullptr;
  try {
    *out = new slf_table{fn()};
    return SLF_OK;
  } catch (const selinf::Error& e) {
    return fail(SLF_ERR_DATA, e.what());
  } catch (const std::exception& e) {
    return fail(SLF_ERR_DATA, e.what());
  }
}

selinf::MethodSet to_method_set(unsigned mask) {
  selinf::MethodSet m = selinf::MethodSet::none();
  m.naive = mask & SLF_METHOD_NAIVE;
  m.exact = mask & SLF_METHOD_EXACT;
  m.bonferroni = mask & SLF_METHOD_BONFERRONI;
  m.scheffe = mask & SLF_METHOD_SCHEFFE;
  m.ftest = mask & SLF_METHOD_FTEST;
  m.lemma2 = mask & SLF_METHOD_LEMMA2;
  return m;
}

} // namespace

extern "C" {

const char* slf_last_error(void) { return g_last_error.c_str(); }

int slf_dataset_load_csv(const char* path, const char* response,
                         char delimiter, int normalize_names,
                         slf_dataset** out) {
  if (out == nullptr || path == nullptr || response == nullptr)
    return fail(SLF_ERR_USAGE, "null argument");
  *out = nullptr;
  try {
    selinf::CsvOptions opts;
    opts.delimiter = delimiter;
    opts.normalize_names = normalize_names != 0;
    *out = new slf_dataset{selinf::load_csv(path, response, opts)};
    return SLF_OK;
  } catch (const std::exception& e) {
    return fail(SLF_ERR_DATA, e.what());
  }
}

long slf_dataset_rows(const slf_dataset* ds) {
  return ds ? static_cast<long>(ds->ds.n()) : -1;
}

long slf_dataset_cols(const slf_dataset* ds) {
  return ds ? static_cast<long>(ds->ds.p()) : -1;
}

const char* slf_dataset_predictor_name(const slf_dataset* ds, long j) {
  if (ds == nullptr || j < 0 || j >= static_cast<long>(ds->ds.p())) return nullptr;
  return ds->ds.predictor_names[static_cast<size_t>(j)].c_str();
}

void slf_dataset_free(slf_dataset* ds) { delete ds; }

int slf_stepwise(const slf_dataset* ds, unsigned methods, long replicates,
                 unsigned long long seed, slf_table** out) {
  if (ds == nullptr) return fail(SLF_ERR_USAGE, "null dataset");
  if ((methods & SLF_METHOD_ALL) == 0)
    return fail(SLF_ERR_USAGE, "no methods requested");
  return guarded(out, [&] {
    const selinf::MethodSet m = to_method_set(methods);
    const selinf::StepwiseTable t =
        selinf::run_stepwise(ds->ds, m, replicates, seed,
                             selinf::default_thread_count());
    return selinf::stepwise_report(ds->ds, t, m);
  });
}

int slf_lasso(const slf_dataset* ds, int reference, slf_table** out) {
  if (ds == nullptr) return fail(SLF_ERR_USAGE, "null dataset");
  if (reference != SLF_REF_F2_DFERR && reference != SLF_REF_EXP_MEAN_ONE)
    return fail(SLF_ERR_USAGE, "invalid reference");
  return guarded(out, [&] {
    const auto ref = reference == SLF_REF_F2_DFERR
                         ? selinf::LassoReference::f2_dferr
                         : selinf::LassoReference::exp_mean_one;
    const selinf::SigmaEstimate sig = selinf::sigma_full(ds->ds);
    return selinf::lasso_report(ds->ds,
                                selinf::lasso_pvalue_sequence(ds->ds, sig, ref));
  });
}

int slf_bootstrap(const slf_dataset* ds, long resamples, double threshold,
                  int steps, int reference, unsigned long long seed,
                  slf_table** out) {
  if (ds == nullptr) return fail(SLF_ERR_USAGE, "null dataset");
  if (resamples < 1 || steps < 1 || !(threshold > 0.0 && threshold < 1.0))
    return fail(SLF_ERR_USAGE, "invalid bootstrap parameters");
  return guarded(out, [&] {
    const auto ref = reference == SLF_REF_F2_DFERR
                         ? selinf::LassoReference::f2_dferr
                         : selinf::LassoReference::exp_mean_one;
    return selinf::bootstrap_report(
        selinf::run_bootstrap(ds->ds, resamples, threshold, steps, ref, seed,
                              selinf::default_thread_count()));
  });
}

int slf_nullsim_spacing(int n, int p, int j, long replicates, double rho,
                        unsigned long long seed, slf_table** out) {
  return guarded(out, [&] {
    return selinf::nullsim_report(
        selinf::simulate_spacing_null(n, p, j, replicates, rho, seed));
  });
}

int slf_nullsim_lemma2(int n, int p, long replicates, unsigned long long seed,
                       slf_table** out) {
  return guarded(out, [&] {
    return selinf::nullsim_report(
        selinf::simulate_lemma2_null(n, p, replicates, seed));
  });
}

int slf_nullsim_selection(int p, long replicates, unsigned long long seed,
                          slf_table** out) {
  return guarded(out, [&] {
    return selinf::nullsim_report(
        selinf::simulate_selection_null(p, replicates, seed));
  });
}

long slf_table_rows(const slf_table* t) {
  return t ? static_cast<long>(t->table.n_rows()) : -1;
}

long slf_table_cols(const slf_table* t) {
  return t ? static_cast<long>(t->table.columns().size()) : -1;
}

const char* slf_table_column_name(const slf_table* t, long col) {
  if (t == nullptr || col < 0 ||
      col >= static_cast<long>(t->table.columns().size()))
    return nullptr;
  return t->table.columns()[static_cast<size_t>(col)].c_str();
}

int slf_table_cell_is_null(const slf_table* t, long row, long col) {
  if (t == nullptr || row < 0 || col < 0 ||
      row >= static_cast<long>(t->table.n_rows()) ||
      col >= static_cast<long>(t->table.columns().size()))
    return 1;
  return std::holds_alternative<std::monostate>(
             t->table.at(static_cast<size_t>(row), static_cast<size_t>(col)))
             ? 1
             : 0;
}

int slf_table_cell_number(const slf_table* t, long row, long col, double* out) {
  if (t == nullptr || out == nullptr || row < 0 || col < 0 ||
      row >= static_cast<long>(t->table.n_rows()) ||
      col >= static_cast<long>(t->table.columns().size()))
    return fail(SLF_ERR_USAGE, "cell index out of range");
  const auto& cell =
      t->table.at(static_cast<size_t>(row), static_cast<size_t>(col));
  if (const auto* v = std::get_if<double>(&cell)) {
    *out = *v;
    return SLF_OK;
  }
  return fail(SLF_ERR_USAGE, "cell is not numeric");
}

const char* slf_table_cell_string(const slf_table* t, long row, long col) {
  if (t == nullptr || row < 0 || col < 0 ||
      row >= static_cast<long>(t->table.n_rows()) ||
      col >= static_cast<long>(t->table.columns().size()))
    return nullptr;
  const auto& cell =
      t->table.at(static_cast<size_t>(row), static_cast<size_t>(col));
  if (const auto* s = std::get_if<std::string>(&cell)) return s->c_str();
  return nullptr;
}

int slf_table_render(const slf_table* t, int format, int digits, char** out) {
  if (t == nullptr || out == nullptr)
    return fail(SLF_ERR_USAGE, "null argument");
  if (format < SLF_FORMAT_TEXT || format > SLF_FORMAT_JSON)
    return fail(SLF_ERR_USAGE, "invalid format");
  try {
    const std::string s = t->table.render(
        static_cast<selinf::TableFormat>(format), digits);
    *out = new char[s.size() + 1];
    std::memcpy(*out, s.c_str(), s.size() + 1);
    return SLF_OK;
  } catch (const std::exception& e) {
    return fail(SLF_ERR_DATA, e.what());
  }
}

void slf_table_free(slf_table* t) { delete t; }

void slf_string_free(char* s) { delete[] s; }

} // extern "C"
