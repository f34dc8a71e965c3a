#include "rankagg/random.hpp"

#include <bit>
#include <vector>

namespace rankagg {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  return derive_seed(derive_seed(seed, a), b);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  for (;;) {
    const std::uint64_t x = engine_() & mask;
    if (x < bound) return x;
  }
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Ranking uniform_ranking(std::size_t m, Rng& rng) {
  std::vector<Candidate> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<Candidate>(i);
  rng.shuffle(std::span<Candidate>(order));
  return Ranking(std::move(order));
}

}  // namespace rankagg
