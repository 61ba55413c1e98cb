#ifndef SELINF_RNG_HPP
#define SELINF_RNG_HPP

#include <Eigen/Dense>
#include <cstdint>

namespace selinf {

// Splittable stream: the state is derived from (seed, stream_id) only, so
// replicate b can always be run on stream_id = b and a parallel run produces
// the same draws as a serial one.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  double uniform01(); // in (0,1)
  double normal();    // standard normal, Box-Muller
  double chisq(double dof); // Marsaglia-Tsang gamma, dof/2 shape, scale 2

  Eigen::VectorXd normal_vector(Eigen::Index n);

private:
  double gamma_shape_ge1(double shape);
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace selinf

#endif
