// selinf command-line front end. Talks to the library only through the
// C API in selinf.h; exit codes: 0 success, 1 data/numeric error, 2 usage.
#include "CLI11.hpp"
#include "selinf.h"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

struct TableDeleter {
  void operator()(slf_table* t) const { slf_table_free(t); }
};
struct DatasetDeleter {
  void operator()(slf_dataset* d) const { slf_dataset_free(d); }
};
using TablePtr = std::unique_ptr<slf_table, TableDeleter>;
using DatasetPtr = std::unique_ptr<slf_dataset, DatasetDeleter>;

int parse_format(const std::string& s, int& out) {
  if (s == "text") out = SLF_FORMAT_TEXT;
  else if (s == "csv") out = SLF_FORMAT_CSV;
  else if (s == "json") out = SLF_FORMAT_JSON;
  else return -1;
  return 0;
}

int parse_reference(const std::string& s, int& out) {
  if (s == "f2") out = SLF_REF_F2_DFERR;
  else if (s == "exp1") out = SLF_REF_EXP_MEAN_ONE;
  else return -1;
  return 0;
}

int parse_methods(const std::string& list, unsigned& out) {
  static const std::map<std::string, unsigned> table = {
      {"naive", SLF_METHOD_NAIVE},         {"exact", SLF_METHOD_EXACT},
      {"bonferroni", SLF_METHOD_BONFERRONI}, {"scheffe", SLF_METHOD_SCHEFFE},
      {"ftest", SLF_METHOD_FTEST},         {"lemma2", SLF_METHOD_LEMMA2},
      {"all", SLF_METHOD_ALL}};
  out = 0;
  std::string item;
  for (size_t i = 0; i <= list.size(); ++i) {
    if (i == list.size() || list[i] == ',') {
      if (!item.empty()) {
        auto it = table.find(item);
        if (it == table.end()) return -1;
        out |= it->second;
        item.clear();
      }
    } else {
      item += list[i];
    }
  }
  return out == 0 ? -1 : 0;
}

void apply_threads(int threads) {
  if (threads > 0) {
#ifdef _WIN32
    _putenv_s("SELINF_THREADS", std::to_string(threads).c_str());
#else
    setenv("SELINF_THREADS", std::to_string(threads).c_str(), 1);
#endif
  }
}

int emit(const slf_table* t, int format, int digits) {
  char* text = nullptr;
  if (slf_table_render(t, format, digits, &text) != SLF_OK) {
    std::fprintf(stderr, "error: %s\n", slf_last_error());
    return 1;
  }
  std::fputs(text, stdout);
  slf_string_free(text);
  return 0;
}

int load(const std::string& path, const std::string& response, char delimiter,
         DatasetPtr& out) {
  slf_dataset* raw = nullptr;
  int rc = slf_dataset_load_csv(path.c_str(), response.c_str(), delimiter,
                                /*normalize_names=*/1, &raw);
  if (rc != SLF_OK) {
    std::fprintf(stderr, "error: %s\n", slf_last_error());
    return rc == SLF_ERR_USAGE ? 2 : 1;
  }
  out.reset(raw);
  return 0;
}

int finish(int rc, slf_table* raw, int format, int digits) {
  if (rc != SLF_OK) {
    std::fprintf(stderr, "error: %s\n", slf_last_error());
    return rc == SLF_ERR_USAGE ? 2 : 1;
  }
  TablePtr t(raw);
  return emit(t.get(), format, digits);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential post-selection inference for linear regression"};
  app.require_subcommand(1);

  std::string data, response, delimiter = ";", methods = "all";
  std::string format_name = "text", reference_name = "f2", mode;
  int digits = 4, threads = 0;
  long reps = 99999, B = 1000;
  int steps = 8, n = 100, p = 10, j = 1;
  long nullsim_reps = 10000;
  double threshold = 0.05, rho = 0.0;
  unsigned long long seed = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--digits", digits, "decimal places")->check(CLI::Range(0, 17));
    sub->add_option("--threads", threads, "worker thread cap");
  };
  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", data, "CSV file")->required();
    sub->add_option("--response", response, "response column")->required();
    sub->add_option("--delimiter", delimiter, "field delimiter");
  };

  CLI::App* sw = app.add_subcommand("stepwise", "forward stepwise p-value table");
  add_data(sw);
  sw->add_option("--methods", methods, "comma list: naive,exact,bonferroni,scheffe,ftest,lemma2,all");
  sw->add_option("--reps", reps, "Monte Carlo replicates for the exact method");
  sw->add_option("--seed", seed, "RNG seed");
  add_common(sw);

  CLI::App* la = app.add_subcommand("lasso", "lasso knot-spacing p-value table");
  add_data(la);
  la->add_option("--reference", reference_name, "f2|exp1")
      ->check(CLI::IsMember({"f2", "exp1"}));
  add_common(la);

  CLI::App* bs = app.add_subcommand("bootstrap", "pairs bootstrap of lasso p-values");
  add_data(bs);
  bs->add_option("--B", B, "bootstrap resamples");
  bs->add_option("--threshold", threshold, "p-value threshold for model size");
  bs->add_option("--steps", steps, "steps to report");
  bs->add_option("--seed", seed, "RNG seed");
  bs->add_option("--reference", reference_name, "f2|exp1")
      ->check(CLI::IsMember({"f2", "exp1"}));
  add_common(bs);

  CLI::App* ns = app.add_subcommand("nullsim", "null-distribution validation");
  ns->add_option("--mode", mode, "spacing|lemma2|selection")
      ->required()
      ->check(CLI::IsMember({"spacing", "lemma2", "selection"}));
  ns->add_option("--n", n, "sample size");
  ns->add_option("--p", p, "number of predictors");
  ns->add_option("--j", j, "knot index (spacing mode)");
  ns->add_option("--reps", nullsim_reps, "simulation replicates");
  ns->add_option("--rho", rho, "equicorrelation (spacing mode)");
  ns->add_option("--seed", seed, "RNG seed");
  add_common(ns);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (delimiter.size() != 1) {
    std::fprintf(stderr, "error: --delimiter must be a single character\n");
    return 2;
  }
  int format = 0, reference = 0;
  parse_format(format_name, format);
  parse_reference(reference_name, reference);
  apply_threads(threads);

  if (sw->parsed()) {
    unsigned mask = 0;
    if (parse_methods(methods, mask) != 0) {
      std::fprintf(stderr, "error: unknown method in --methods '%s'\n",
                   methods.c_str());
      return 2;
    }
    DatasetPtr ds;
    if (int rc = load(data, response, delimiter[0], ds)) return rc;
    slf_table* t = nullptr;
    const int rc = slf_stepwise(ds.get(), mask, reps, seed, &t);
    return finish(rc, t, format, digits);
  }
  if (la->parsed()) {
    DatasetPtr ds;
    if (int rc = load(data, response, delimiter[0], ds)) return rc;
    slf_table* t = nullptr;
    const int rc = slf_lasso(ds.get(), reference, &t);
    return finish(rc, t, format, digits);
  }
  if (bs->parsed()) {
    DatasetPtr ds;
    if (int rc = load(data, response, delimiter[0], ds)) return rc;
    slf_table* t = nullptr;
    const int rc = slf_bootstrap(ds.get(), B, threshold, steps, reference, seed, &t);
    return finish(rc, t, format, digits);
  }
  if (ns->parsed()) {
    slf_table* t = nullptr;
    int rc;
    if (mode == "spacing")
      rc = slf_nullsim_spacing(n, p, j, nullsim_reps, rho, seed, &t);
    else if (mode == "lemma2")
      rc = slf_nullsim_lemma2(n, p, nullsim_reps, seed, &t);
    else
      rc = slf_nullsim_selection(p, nullsim_reps, seed, &t);
    return finish(rc, t, format, digits);
  }
  return 2;
}
