#include "rtour/rng.hpp"

#include <numeric>
#include <utility>

namespace rtour {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  if (bound <= 1)
    return 0;
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  SplitMix64 mix(seed ^ h);
  mix.next();
  SplitMix64 mix2(mix.next() ^ (index * 0xD1B54A32D192ED03ULL));
  return mix2.next();
}

std::vector<int> sample_without_replacement(SplitMix64 &rng, int n,
                                            int count) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count && i < n; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count < n ? count : n));
  return pool;
}

} // namespace rtour
