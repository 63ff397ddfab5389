#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace exsec::detail {

// Runs body(chunk_index, lo, hi) over a partition of [0, n) into contiguous
// chunks, one per worker. Callers must only write to disjoint, index-owned
// state so that results do not depend on the partitioning.
template <typename Body>
void parallel_chunks(std::int64_t n, int workers, Body&& body) {
  if (n <= 0) return;
  if (workers < 1) workers = 1;
  const auto chunks = static_cast<std::int64_t>(workers) < n ? workers
                                                             : static_cast<int>(n);
  if (chunks == 1) {
    body(0, static_cast<std::int64_t>(0), n);
    return;
  }
  const std::int64_t per_chunk = (n + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t lo = per_chunk * c;
    const std::int64_t hi = lo + per_chunk < n ? lo + per_chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([&body, c, lo, hi] { body(c, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace exsec::detail
