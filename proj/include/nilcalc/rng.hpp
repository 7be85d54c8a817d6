#pragma once

#include <cstdint>
#include <limits>

namespace nilcalc {

// SplitMix64. Hand-rolled so that reports are byte-identical across
// standard libraries; all randomness in the project flows through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for trial `index` of a run seeded with `seed`;
  // parallel or reordered trials cannot change results.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return Rng(mixer.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Rejection-free modulo is fine here: n is
  // tiny relative to 2^64, bias is far below anything observable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace nilcalc
