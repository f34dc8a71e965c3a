#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/rules.hpp"

namespace rankagg {

enum class QueryMode { ExactPosition, TopK };

// Is there a ranking selected by `rule` on P with candidate d at position k
// (ExactPosition) or at one of the positions 1..k (TopK)? Positions are
// 1-based here, as in the problem statement.
struct DeterminationQuery {
  RuleId rule;
  Candidate d = 0;
  std::size_t k = 1;
  QueryMode mode = QueryMode::ExactPosition;
};

struct DeterminationLimits {
  std::size_t max_candidates = 22;       // subset DP
  std::size_t max_states = 20'000'000;   // subset DP, summed over layers
  std::size_t max_voters = 4;            // bottom-list DP
  std::size_t brute_max_candidates = 10;
};

struct DeterminationResult {
  bool answer = false;
  // Elimination order of one execution realizing the answer (candidates in
  // the order the rule removes them), present when answer is true.
  std::vector<Candidate> witness;
};

// Output ranking produced by an elimination order of the given family.
Ranking ranking_from_elimination(RuleFamily family, const std::vector<Candidate>& order);

// Elimination-set DP. A SeqWinner state is the set of candidates already
// placed at the top, a SeqLoser state the set already placed at the bottom.
// States are explored depth first from the empty set, only sets without d
// and only as deep as the target position needs; limits.max_states bounds
// the number of dead states remembered.
DeterminationResult subset_dp_decide(const Profile& p, const DeterminationQuery& q,
                                     const DeterminationLimits& limits = {});

// SeqWinner(s), k on P <-> SeqLoser(s*), m-k+1 on rev(P). Exact-position
// queries only; top-k does not map onto a top-k query.
std::pair<DeterminationQuery, Profile> transfer_query(const DeterminationQuery& q,
                                                      const Profile& p);

// STV: candidates without first places fall out first, in any order and
// without moving a vote, so only the candidates with first places need the
// subset DP.
DeterminationResult stv_decide(const Profile& p, const DeterminationQuery& q,
                               const DeterminationLimits& limits = {});

// Coombs: states are bottom lists (each voter's last remaining candidate);
// the eliminated set is recovered from the list. Limited to
// limits.max_voters voters counted with multiplicity.
DeterminationResult coombs_bottomlist_decide(const Profile& p, const DeterminationQuery& q,
                                             const DeterminationLimits& limits = {});

// Memoized recursion over every tied choice; bit k-1 of the result is set
// when position k is achievable for d.
std::uint64_t brute_force_positions(const Profile& p, const RuleId& rule, Candidate d,
                                    const DeterminationLimits& limits = {});
DeterminationResult brute_force_decide(const Profile& p, const DeterminationQuery& q,
                                       const DeterminationLimits& limits = {});

// Sorted 1-based positions d attains over all selected rankings.
std::vector<std::size_t> achievable_positions(const Profile& p, const RuleId& rule, Candidate d,
                                              const DeterminationLimits& limits = {});

enum class DecisionAlgorithm { Auto, SubsetDp, Stv, BottomList, Brute };

// Auto uses stv_decide for STV and the subset DP otherwise.
DeterminationResult decide(const Profile& p, const DeterminationQuery& q,
                           DecisionAlgorithm algo = DecisionAlgorithm::Auto,
                           const DeterminationLimits& limits = {});

}  // namespace rankagg
