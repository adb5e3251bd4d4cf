#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gasket {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(block) for block = 0..n_blocks-1 on up to `threads` workers.
// Blocks are claimed dynamically but each writes only its own slot of any
// output, so results never depend on the schedule. The first exception
// thrown by a worker is rethrown on the calling thread.
inline void parallel_blocks(std::size_t n_blocks, int threads,
                            const std::function<void(std::size_t)>& fn) {
  const int n_workers = std::min<std::size_t>(resolve_threads(threads), n_blocks);
  if (n_workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      try {
        fn(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Neumaier-compensated accumulator; summation order fixed by the caller.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace gasket
