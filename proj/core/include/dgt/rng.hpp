#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace dgt {

/// SplitMix64 finalizer. Used to decorrelate user seeds and to derive
/// per-(repetition, snapshot) streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for repetition `rep`, snapshot `t` derived from the user seed:
///   splitmix64(splitmix64(splitmix64(base) ^ rep) ^ t)
/// A rerun of any single (rep, t) cell reproduces without replaying others.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t rep,
                                    std::uint64_t t) noexcept {
  return splitmix64(splitmix64(splitmix64(base) ^ rep) ^ t);
}

/// Portable seeded generator. The engine is std::mt19937_64, whose output
/// sequence the standard fixes; the distributions below are implemented
/// here because the std:: ones are allowed to differ between libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the result unbiased.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dgt
