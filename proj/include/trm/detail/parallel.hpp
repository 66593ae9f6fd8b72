#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace trm::detail {

/// Number of workers to use when the caller passes 0.
inline unsigned default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Calls body(chunk, begin, end) for every chunk of [0, count). Chunks are
/// handed out dynamically, so the caller must write results into per-chunk
/// slots and merge them in chunk order afterwards. The first exception
/// thrown by any chunk is rethrown here.
template <class Body>
void for_each_chunk(std::uint64_t count, std::uint64_t chunk_size, unsigned threads, Body&& body) {
  const std::uint64_t chunks = (count + chunk_size - 1) / chunk_size;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::uint64_t begin = c * chunk_size;
        body(c, begin, std::min(count, begin + chunk_size));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };
  const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads == 0 ? default_threads() : threads, chunks));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace trm::detail
