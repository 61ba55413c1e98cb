#ifndef SELINF_NULLSIM_HPP
#define SELINF_NULLSIM_HPP

#include <cstdint>
#include <string>

namespace selinf {

struct NullSimReport {
  std::string design;     // e.g. "iid-z", "orthonormal n=200 p=50"
  int n = 0, p = 0, j = 0;
  double rho = 0.0;
  long replicates = 0;
  double ks_distance = 0.0;
  double empirical_mean = 0.0;
  std::string reference; // law the empirical distribution is compared to
};

// Spacing statistic |z^(j)| (|z^(j)| - |z^(j+1)|) under the global null,
// compared against Exp(mean 1/j). rho = 0 uses i.i.d. z-statistics (the
// orthogonal-design reduction); rho > 0 builds equicorrelated designs.
NullSimReport simulate_spacing_null(int n, int p, int j, long replicates,
                                    double rho, std::uint64_t seed);

// Step-1 stepwise statistic t_max (t_max - t_second) on orthonormal designs
// with estimated sigma, compared against F(2, n - p - 1).
NullSimReport simulate_lemma2_null(int n, int p, long replicates,
                                   std::uint64_t seed);

// Max of p independent squared standard normals, compared against the
// closed-form max-chi^2_1 law.
NullSimReport simulate_selection_null(int p, long replicates,
                                      std::uint64_t seed);

} // namespace selinf

#endif
