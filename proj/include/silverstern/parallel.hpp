#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace silverstern::detail {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs `body(chunk_lo, chunk_hi)` over contiguous chunks of the inclusive
/// range [lo, hi] and returns the per-chunk results in range order, so any
/// associative fold over them is deterministic regardless of worker count.
template <class R, class Body>
std::vector<R> chunked(std::uint64_t lo, std::uint64_t hi, int workers, Body body) {
  const std::uint64_t count = hi - lo + 1;
  std::uint64_t parts = static_cast<std::uint64_t>(resolve_workers(workers));
  if (parts > count) parts = count;
  if (parts <= 1) return {body(lo, hi)};

  std::vector<R> results(parts);
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> pool;
  pool.reserve(parts);
  const std::uint64_t base = count / parts;
  const std::uint64_t extra = count % parts;
  std::uint64_t start = lo;
  for (std::uint64_t i = 0; i < parts; ++i) {
    const std::uint64_t size = base + (i < extra ? 1 : 0);
    const std::uint64_t chunk_lo = start;
    const std::uint64_t chunk_hi = start + size - 1;
    start += size;
    pool.emplace_back([&, i, chunk_lo, chunk_hi] {
      try {
        results[i] = body(chunk_lo, chunk_hi);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace silverstern::detail
