#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/ranking.hpp"
#include "rankagg/types.hpp"

namespace rankagg {

// Entry (c, d) is the number of voters preferring d to c, i.e. the cost of
// placing c above d. (c, d) + (d, c) = n for c != d.
class DisagreementMatrix {
 public:
  explicit DisagreementMatrix(const Profile& p);

  std::size_t size() const noexcept { return m_; }
  std::uint64_t num_voters() const noexcept { return n_; }
  std::uint64_t operator()(Candidate c, Candidate d) const { return cost_[c * m_ + d]; }

 private:
  std::size_t m_;
  std::uint64_t n_;
  std::vector<std::uint64_t> cost_;
};

// Sum over voters (with multiplicity) of swap_distance(r, vote).
std::uint64_t kemeny_total_distance(const Ranking& r, const Profile& p);

struct KemenyOptions {
  std::size_t max_candidates = 16;
  // Stop after this many minimizers; 0 means all of them.
  std::size_t limit = 0;
};

struct KemenyResult {
  std::uint64_t optimum = 0;
  std::vector<Ranking> rankings;  // lexicographic order of candidate sequences
  bool truncated = false;
};

// Exact Kemeny rankings by dynamic programming over the set of candidates
// already placed at the top. For every set S the table keeps the cheapest
// cost of ordering the remaining candidates below S and the set of optimal
// next candidates, so all minimizers are recovered by walking the optimal
// choices from the empty set. Throws ResourceError above max_candidates.
KemenyResult kemeny_rankings(const Profile& p, const KemenyOptions& options = {});

struct KemenyChoice {
  Ranking ranking;
  std::uint64_t optimum = 0;
  // Per position: how many candidates were optimal at that step (>= 1).
  std::vector<std::size_t> optimal_choices;
};

// The minimizer that comes first when candidates are compared by the tie
// order position by position.
KemenyChoice kemeny_ranking(const Profile& p, const TieBreakOrder& tie,
                            const KemenyOptions& options = {});

// 1/2 (|i - pos(a, cand(b, i))| + |i - pos(b, cand(a, i))|) for the 1-based
// position i. Throws DomainError for i outside [1, m].
Rational position_displacement(const Ranking& a, const Ranking& b, std::size_t position);

}  // namespace rankagg
