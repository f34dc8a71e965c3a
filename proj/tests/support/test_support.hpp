#pragma once

#include <filesystem>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/profile_io.hpp"
#include "rankagg/random.hpp"
#include "rankagg/ranking.hpp"
#include "rankagg/sampling.hpp"

namespace rankagg::test {

// 3 a>b>c, 2 b>c>a, 2 c>b>a with a=0, b=1, c=2.
inline Profile p0() { return parse_profile("3 3\n3: 0 1 2\n2: 1 2 0\n2: 2 1 0\n"); }

inline Ranking rk(std::initializer_list<Candidate> order) { return make_ranking(order); }

inline std::set<Ranking> rankings(std::initializer_list<std::initializer_list<Candidate>> list) {
  std::set<Ranking> out;
  for (const auto& r : list) out.insert(make_ranking(r));
  return out;
}

inline Profile unanimous(std::size_t m, std::uint64_t n) {
  Profile p(m);
  p.add(Ranking::identity(m), n);
  return p;
}

// IC profile with m in [m_lo, m_hi] and n in [n_lo, n_hi].
inline Profile random_profile(Rng& rng, std::size_t m_lo, std::size_t m_hi, std::size_t n_lo,
                              std::size_t n_hi) {
  const std::size_t m = m_lo + static_cast<std::size_t>(rng.below(m_hi - m_lo + 1));
  const std::size_t n = n_lo + static_cast<std::size_t>(rng.below(n_hi - n_lo + 1));
  return sample_impartial_culture(m, n, rng.next());
}

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(RANKAGG_TEST_DATA) / name;
}

}  // namespace rankagg::test
