#ifndef SELINF_TESTS_HELPERS_HPP
#define SELINF_TESTS_HELPERS_HPP

#include "selinf/dataset.hpp"
#include "selinf/rng.hpp"

#include <cstdlib>
#include <string>

namespace testutil {

inline std::string data_dir() {
  if (const char* env = std::getenv("SELINF_DATA_DIR")) return env;
  return "data";
}

inline std::string wine_path() { return data_dir() + "/winequality-red.csv"; }

// Random regression instance with standard-normal design and noise.
inline selinf::Dataset random_dataset(selinf::RngStream& rng, Eigen::Index n,
                                      Eigen::Index p, double signal = 1.0) {
  selinf::Dataset ds;
  ds.X.resize(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) ds.X(i, j) = rng.normal();
  Eigen::VectorXd beta(p);
  for (Eigen::Index j = 0; j < p; ++j) beta(j) = signal * rng.normal();
  ds.y = ds.X * beta + rng.normal_vector(n);
  for (Eigen::Index j = 0; j < p; ++j)
    ds.predictor_names.push_back("x" + std::to_string(j));
  ds.response_name = "y";
  return ds;
}

} // namespace testutil

#endif
