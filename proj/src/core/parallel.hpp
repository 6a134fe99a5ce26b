#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mk {

/// 0 means "use the hardware concurrency".
inline unsigned effective_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// body(chunk, begin, end). Callers merge per-chunk results in chunk order,
/// so the outcome does not depend on scheduling. The exception of the
/// lowest failing chunk is rethrown.
template <typename Body>
void parallel_chunks(std::uint64_t n, unsigned jobs, Body&& body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(effective_jobs(jobs), n));
  if (workers == 1) {
    body(std::size_t{0}, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = n * w / workers, end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(static_cast<std::size_t>(w), begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::size_t chunk_count(std::uint64_t n, unsigned jobs) {
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(effective_jobs(jobs), n)));
}

}  // namespace mk
