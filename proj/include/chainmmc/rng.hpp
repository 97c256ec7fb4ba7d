#ifndef CHAINMMC_RNG_HPP
#define CHAINMMC_RNG_HPP

#include <cstdint>

namespace chainmmc {

// Deterministic counter-keyed generator (splitmix64). Each Monte Carlo trial
// owns a stream keyed by (seed, trial index), so results are reproducible and
// independent of how trials are split across threads.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream)
      : state_(seed + stream * 0x9E3779B97F4A7C15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; exact and platform independent.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace chainmmc

#endif
