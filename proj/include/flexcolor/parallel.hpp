// Deterministic work distribution: items are processed in fixed-size rounds
// with a barrier between rounds, so the set of examined items (and every
// merged result) is independent of the worker count and of scheduling.
#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace flexcolor {

inline int resolve_workers(int requested) {
  if (const char* env = std::getenv("FLEXCOLOR_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n); fn must only touch per-index state.
inline void parallel_for(std::int64_t n, int workers,
                         const std::function<void(std::int64_t)>& fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || n <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto run = [&] {
    for (;;) {
      std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

// Processes items round by round (kRoundSize items per round, all of them),
// stopping after the first round that contains a hit.  Returns the least
// hitting index, or -1.  Every index below the returned one is guaranteed to
// have been examined, so the result and the examined set are deterministic.
class RoundRunner {
 public:
  static constexpr std::int64_t kRoundSize = 1024;

  // has_more(i) -> item i exists; probe(i) -> true on hit.
  // Items must be addressable in increasing order.
  static std::int64_t find_first(
      int workers, const std::function<bool(std::int64_t)>& has_item,
      const std::function<bool(std::int64_t)>& probe,
      const std::function<bool()>& out_of_budget = nullptr,
      bool* budget_hit = nullptr) {
    workers = resolve_workers(workers);
    std::int64_t base = 0;
    for (;;) {
      // Determine how many items this round actually has.
      std::int64_t count = 0;
      while (count < kRoundSize && has_item(base + count)) ++count;
      if (count == 0) return -1;
      std::atomic<std::int64_t> best{-1};
      std::atomic<std::int64_t> next{0};
      auto run = [&] {
        for (;;) {
          std::int64_t off = next.fetch_add(1);
          if (off >= count) return;
          if (probe(base + off)) {
            std::int64_t idx = base + off;
            std::int64_t cur = best.load();
            while ((cur == -1 || idx < cur) &&
                   !best.compare_exchange_weak(cur, idx)) {
            }
          }
        }
      };
      if (workers <= 1) {
        run();
      } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(run);
        run();
        for (auto& t : pool) t.join();
      }
      if (best.load() != -1) return best.load();
      if (count < kRoundSize) return -1;
      if (out_of_budget && out_of_budget()) {
        if (budget_hit) *budget_hit = true;
        return -1;
      }
      base += count;
    }
  }
};

}  // namespace flexcolor
