#ifndef SELINF_PARALLEL_HPP
#define SELINF_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace selinf {

inline int default_thread_count() {
  if (const char* env = std::getenv("SELINF_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 256);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 256u));
}

// Runs fn(i) for i in [0, count) over contiguous per-thread ranges. Results
// must be written into per-index slots so the outcome is independent of the
// thread count. The first exception, if any, is rethrown on the caller.
template <typename Fn>
void parallel_for_index(long count, int threads, Fn&& fn) {
  threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, count)));
  if (threads == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  const long chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long b0 = t * chunk;
    const long b1 = std::min(count, b0 + chunk);
    workers.emplace_back([&, t, b0, b1] {
      try {
        for (long i = b0; i < b1; ++i) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace selinf

#endif
