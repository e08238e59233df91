#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace resmat {

/// Worker count: RESMAT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("RESMAT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks, evaluates body(begin, end) on up
/// to `threads` workers and sums the results. The sum does not depend on the
/// worker count.
template <class Body>
std::uint64_t parallel_sum(std::uint64_t total, unsigned threads, Body&& body) {
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1)));
  if (threads == 1) return body(std::uint64_t{0}, total);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] { partial[t] = body(begin, end); });
  }
  for (auto& w : workers) w.join();
  std::uint64_t sum = 0;
  for (auto v : partial) sum += v;
  return sum;
}

}  // namespace resmat
