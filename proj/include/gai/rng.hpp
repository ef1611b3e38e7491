#pragma once

#include <cstdint>
#include <random>

namespace gai {

// SplitMix64 output function. Only used for seed derivation, never as the
// simulation stream itself.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Per-run seed for replication i of a batch. Documented contract: run i uses
// splitmix64(master + (i+1)*golden), so seeds are pairwise distinct and a run
// can be reproduced in isolation from (master_seed, i) alone.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) {
  return splitmix64(master_seed + (run_index + 1) * 0x9E3779B97F4A7C15ULL);
}

// mt19937_64 is fully specified by the standard, so draw sequences are
// identical across platforms and compilers.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

  // 53-bit uniform in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gai
