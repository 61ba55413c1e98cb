#ifndef SELINF_DATASET_HPP
#define SELINF_DATASET_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace selinf {

// Named design matrix plus response. Immutable once built; all downstream
// modules share it by const reference.
struct Dataset {
  std::vector<std::string> predictor_names; // length p
  Eigen::MatrixXd X;                        // n x p
  Eigen::VectorXd y;                        // length n
  std::string response_name;

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index p() const { return X.cols(); }

  // Enforces: n > p + 1, finite entries, unique nonempty names.
  void validate() const;
};

struct CsvOptions {
  char delimiter = ';';
  bool normalize_names = true; // lower-case, spaces -> underscores
};

Dataset load_csv(const std::string& path, const std::string& response,
                 const CsvOptions& opts = {});

void save_csv(const Dataset& ds, const std::string& path,
              char delimiter = ';');

} // namespace selinf

#endif
