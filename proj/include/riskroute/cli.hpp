#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <thread>
#include <vector>

namespace riskroute::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kConvergenceFailure = 3,
  kBoundFailure = 4,
};

/// Entry point shared by the executable and the tests. `argv[0]` is the
/// program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count: hardware concurrency, capped by RISKROUTE_THREADS when set.
std::size_t worker_count();

/// Evaluates fn(0..n-1) on up to `workers` threads. Results come back in
/// index order whatever order the jobs finish in.
template <typename Result>
std::vector<Result> parallel_map(std::size_t n, std::size_t workers, const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(n);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = fn(i);
  };
  workers = std::max<std::size_t>(1, std::min(workers, n));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace riskroute::cli
