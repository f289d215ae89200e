#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace bipow {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-trial seed: splitmix64(seed ^ splitmix64(index + 0x9E3779B97F4A7C15)).
/// Trial i depends on (seed, i) only, so trials can run in any order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Reproducible random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so the draws below are
/// spelled out: integers by rejection sampling on the raw 64-bit output,
/// reals as the top 53 bits scaled by 2^-53, shuffles as Fisher-Yates from
/// the back.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1).
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bipow
