#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ctt {

/// Seedable random stream used everywhere in the solver.
///
/// Wraps std::mt19937_64 (bit-exact across platforms by the standard) and
/// implements its own bounded draws: the standard distributions are not
/// guaranteed to produce identical sequences across library implementations,
/// which would break run-for-run reproducibility of solutions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n). Unbiased via rejection. Requires n >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    // Rejects draws below 2^64 mod n so every residue is equally likely.
    const std::uint64_t threshold = (0ull - n) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Deterministically derives an independent seed for a parallel stream
  /// (trial index, benchmark cell, ...) from a base seed. splitmix64 mixing.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Fisher-Yates shuffle using this stream.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ctt
