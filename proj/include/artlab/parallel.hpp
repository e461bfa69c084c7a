#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace artlab {

/// Split [0, count) into `threads` contiguous chunks and run fn(chunk, begin, end)
/// on each. Chunk c always covers the same range for a given (count, threads),
/// and callers merge per-chunk results in chunk order, so output never depends
/// on scheduling. The first exception thrown by any chunk is rethrown.
template <typename Fn>
void for_each_chunk(std::uint64_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(count, 1));
  const std::uint64_t step = (count + threads - 1) / threads;
  if (threads == 1) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned c = 0; c < threads; ++c) {
    const std::uint64_t begin = std::min(count, c * step);
    const std::uint64_t end = std::min(count, begin + step);
    pool.emplace_back([&, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace artlab
