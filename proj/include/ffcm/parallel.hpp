#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <vector>

namespace ffcm {

inline int default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? static_cast<int>(n) : 1;
}

// Deterministic partitioned reduction: splits [0, total) into `workers`
// contiguous ranges, runs `body(range_begin, range_end)` on each, and
// sums the exact partial results in range order.  The total is
// independent of the partitioning, so reports are byte-identical for
// any worker count.
template <typename T, typename Body>
T parallel_sum(std::uint64_t total, int workers, Body body) {
  if (workers <= 1 || total < 1024) return body(0, total);
  std::vector<T> partial(workers);
  std::vector<std::thread> threads;
  std::uint64_t chunk = total / workers, rem = total % workers;
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&partial, w, begin, end, &body] { partial[w] = body(begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
  T out{};
  for (auto& x : partial) out += x;
  return out;
}

// Same, but merging key -> count maps (sorted keys keep merges stable).
template <typename K, typename Body>
std::map<K, std::int64_t> parallel_histogram(std::uint64_t total, int workers, Body body) {
  if (workers <= 1 || total < 1024) return body(0, total);
  std::vector<std::map<K, std::int64_t>> partial(workers);
  std::vector<std::thread> threads;
  std::uint64_t chunk = total / workers, rem = total % workers;
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&partial, w, begin, end, &body] { partial[w] = body(begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
  std::map<K, std::int64_t> out;
  for (auto& m : partial)
    for (auto& [k, v] : m) out[k] += v;
  return out;
}

}  // namespace ffcm
