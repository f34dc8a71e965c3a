#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "rankagg/ranking.hpp"

namespace rankagg {

// SplitMix64 finalizer. Used to derive independent per-task seeds:
// derive_seed(seed, i) = mix(seed ^ mix(i + golden)).
std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept;

// Reproducible random source.
//
// The engine is std::mt19937_64 seeded with one 64-bit value, whose output
// sequence is fixed by the C++ standard. Integer and real draws are mapped
// here rather than through <random> distributions (whose algorithms are
// implementation-defined), so a (seed, call sequence) pair yields the same
// values on every conforming platform:
//   below(k)  rejection sampling on the smallest 2^b - 1 mask covering k - 1
//   uniform() top 53 bits of one draw times 2^-53, in [0, 1)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);
  double uniform();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Uniformly random ranking of m candidates (Fisher-Yates).
Ranking uniform_ranking(std::size_t m, Rng& rng);

}  // namespace rankagg
