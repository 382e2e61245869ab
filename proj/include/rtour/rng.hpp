#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace rtour {

/// SplitMix64 (Steele, Lea and Flood; reference code by S. Vigna).
///
/// Every random choice in the library goes through this generator so that
/// outputs depend only on the seed, never on the standard library in use.
/// Reference vectors: seeded with 1234567 the first outputs are
/// 6457827717110365317, 3203168211198807973, 9817491932198370423.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  /// Fair coin from the top bit.
  bool coin() noexcept { return (next() >> 63) != 0; }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a parent seed and a label plus
/// index (FNV-1a over the label, mixed through one SplitMix64 step).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index = 0) noexcept;

/// First `count` entries of a uniform random permutation of [0, n)
/// (partial Fisher-Yates).
std::vector<int> sample_without_replacement(SplitMix64 &rng, int n, int count);

} // namespace rtour
