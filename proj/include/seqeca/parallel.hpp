#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace seqeca {

struct ProgressSink {
  std::atomic<std::uint64_t> done{0};
  std::uint64_t total = 0;
};

struct SearchOptions {
  int workers = 0;  // 0 = hardware concurrency
  ProgressSink* progress = nullptr;
};

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Static contiguous partition of [0, total): worker w handles
// [total*w/W, total*(w+1)/W).  Results merged in worker order are independent
// of scheduling, so output does not depend on the worker count.
template <typename Fn>
void run_partitioned(std::uint64_t total, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (total < static_cast<std::uint64_t>(workers)) workers = total ? static_cast<int>(total) : 1;
  if (workers <= 1) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace seqeca
