// Deterministic 64-bit PRNG (splitmix64) so seeded runs reproduce exactly
// across platforms and standard-library versions.
#pragma once

#include <cstdint>
#include <vector>

namespace flexcolor {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.  Modulo bias is irrelevant at our ranges.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  // k distinct values from [0, n), ascending.
  std::vector<int> sample(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + below_int(n - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  // Derives an independent stream for work item i (order-free determinism).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (i + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

}  // namespace flexcolor
