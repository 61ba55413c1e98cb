#ifndef SELINF_ERROR_HPP
#define SELINF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace selinf {

// Data/numeric failures (bad file, rank deficiency, degenerate sigma, ...).
// Usage errors (bad flags) are handled by the CLI layer itself.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace selinf

#endif
