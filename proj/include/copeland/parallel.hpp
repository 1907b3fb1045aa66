#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace copeland {

// Static block partition of [0, count) across `jobs` workers. Results must be
// merged with order-independent reductions so outputs do not depend on the
// worker count.
inline void parallel_for(long long count, int jobs,
                         const std::function<void(long long, long long)>& fn) {
  if (count <= 0) return;
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 2 * jobs) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> workers;
  long long chunk = (count + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    long long lo = j * chunk;
    long long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace copeland
