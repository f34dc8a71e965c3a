#include "rankagg/determination.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "rankagg/errors.hpp"

namespace rankagg {
namespace {

void validate(const Profile& p, const DeterminationQuery& q) {
  const std::size_t m = p.num_candidates();
  if (!q.rule.is_sequential()) {
    throw ConfigurationError("determination needs a sequential rule, got " + q.rule.name());
  }
  if (m == 0) throw DomainError("profile has no candidates");
  if (q.d >= m) throw DomainError("candidate " + std::to_string(q.d) + " out of range");
  if (q.k < 1 || q.k > m) {
    throw DomainError("position " + std::to_string(q.k) + " outside [1, " + std::to_string(m) + "]");
  }
  if (m > kMaxMaskCandidates) throw ResourceError("determination limited to 64 candidates");
}

bool is_plain(const ScoringSystem& s, ScoringKind kind) {
  return s.kind() == kind && !s.is_reversed();
}

// Candidates the rule may remove from `remaining` this round.
CandidateMask choices(const ScoreEvaluator& eval, bool winner, CandidateMask remaining) {
  return winner ? eval.winners(remaining) : eval.losers(remaining);
}

// Appends an arbitrary continuation (lowest index among the choices).
void complete_greedily(const ScoreEvaluator& eval, bool winner, CandidateMask remaining,
                       std::vector<Candidate>& order) {
  while (remaining) {
    const auto c = static_cast<Candidate>(std::countr_zero(choices(eval, winner, remaining)));
    order.push_back(c);
    remaining &= ~bit(c);
  }
}

// Bit j set: d can be chosen in round j+1.
std::uint64_t target_rounds(const DeterminationQuery& q, std::size_t m) {
  const bool winner = q.rule.family == RuleFamily::SeqWinner;
  const std::size_t exact = winner ? q.k - 1 : m - q.k;
  if (q.mode == QueryMode::ExactPosition) return std::uint64_t{1} << exact;
  // Top-k: positions 1..k are rounds 1..k for winners, rounds m-k+1..m for losers.
  std::uint64_t mask = 0;
  for (std::size_t pos = 1; pos <= q.k; ++pos) {
    mask |= std::uint64_t{1} << (winner ? pos - 1 : m - pos);
  }
  return mask;
}

void check_budget(std::size_t states, const DeterminationLimits& limits) {
  if (states > limits.max_states) {
    throw ResourceError("determination state budget of " + std::to_string(limits.max_states) +
                        " exceeded");
  }
}

}  // namespace

Ranking ranking_from_elimination(RuleFamily family, const std::vector<Candidate>& order) {
  if (family == RuleFamily::SeqLoser) return Ranking(std::vector<Candidate>(order.rbegin(), order.rend()));
  return Ranking(order);
}

DeterminationResult subset_dp_decide(const Profile& p, const DeterminationQuery& q,
                                     const DeterminationLimits& limits) {
  validate(p, q);
  const std::size_t m = p.num_candidates();
  if (m > limits.max_candidates) {
    throw ResourceError("subset DP limited to " + std::to_string(limits.max_candidates) +
                        " candidates, got " + std::to_string(m));
  }
  const bool winner = q.rule.family == RuleFamily::SeqWinner;
  const ScoreEvaluator eval(p, q.rule.system);
  const CandidateMask all = full_mask(m);
  const std::uint64_t targets = target_rounds(q, m);
  const std::size_t last = static_cast<std::size_t>(63 - std::countl_zero(targets));
  const std::size_t first = static_cast<std::size_t>(std::countr_zero(targets));
  // Reaching a loser-side top-k depth with d still present is enough: d
  // leaves in some later round and so lands at a position <= k.
  const bool reach_is_enough = !winner && q.mode == QueryMode::TopK;

  // The table T[S] is filled lazily: a depth-first walk from the empty set
  // over reachable sets without d, remembering sets already known to lead
  // nowhere. Only reachable sets are ever touched, which keeps instances
  // with long runs of interchangeable tied candidates cheap.
  std::unordered_set<CandidateMask> dead;
  std::vector<Candidate> path;
  DeterminationResult out;
  const auto search = [&](auto&& self, CandidateMask removed) -> bool {
    const std::size_t depth = path.size();
    const CandidateMask remaining = all & ~removed;
    const CandidateMask ch = choices(eval, winner, remaining);
    if (reach_is_enough && depth == first) {
      out = {true, path};
      complete_greedily(eval, winner, remaining, out.witness);
      return true;
    }
    if (((targets >> depth) & 1U) && contains(ch, q.d)) {
      out = {true, path};
      out.witness.push_back(q.d);
      complete_greedily(eval, winner, remaining & ~bit(q.d), out.witness);
      return true;
    }
    if (depth >= last) return false;
    for (CandidateMask rest = ch & ~bit(q.d); rest; rest &= rest - 1) {
      const auto c = static_cast<Candidate>(std::countr_zero(rest));
      const CandidateMask next = removed | bit(c);
      if (dead.count(next)) continue;
      path.push_back(c);
      if (self(self, next)) return true;
      path.pop_back();
      dead.insert(next);
      check_budget(dead.size(), limits);
    }
    return false;
  };
  search(search, 0);
  return out;
}

std::pair<DeterminationQuery, Profile> transfer_query(const DeterminationQuery& q,
                                                      const Profile& p) {
  validate(p, q);
  if (q.mode != QueryMode::ExactPosition) {
    throw DomainError("only exact-position queries transfer; ask top-k as positions 1..k");
  }
  DeterminationQuery out = q;
  out.rule = dual_rule(q.rule);
  out.k = p.num_candidates() - q.k + 1;
  return {out, reverse_profile(p)};
}

DeterminationResult stv_decide(const Profile& p, const DeterminationQuery& q,
                               const DeterminationLimits& limits) {
  validate(p, q);
  if (q.rule.family != RuleFamily::SeqLoser || !is_plain(q.rule.system, ScoringKind::Plurality)) {
    throw ConfigurationError("stv_decide needs seqlose:plurality, got " + q.rule.name());
  }
  const std::size_t m = p.num_candidates();
  CandidateMask scored = 0;
  for (const auto& g : p.groups()) scored |= bit(g.ranking.front());
  const CandidateMask zero = full_mask(m) & ~scored;
  if (zero == 0) return subset_dp_decide(p, q, limits);

  const std::size_t s = popcount(scored);
  std::vector<Candidate> zeros;
  for (CandidateMask rest = zero; rest; rest &= rest - 1) {
    zeros.push_back(static_cast<Candidate>(std::countr_zero(rest)));
  }
  const ScoreEvaluator eval(p, q.rule.system);

  if (contains(zero, q.d)) {
    // The zero block fills positions s+1..m in any order.
    const std::size_t target = q.mode == QueryMode::ExactPosition ? q.k : std::max(q.k, s + 1);
    if (target < s + 1 || (q.mode == QueryMode::TopK && q.k < s + 1)) return {};
    DeterminationResult out{true, {}};
    const std::size_t before = m - target;  // zero candidates removed ahead of d
    for (const Candidate c : zeros) {
      if (c != q.d && out.witness.size() < before) out.witness.push_back(c);
    }
    out.witness.push_back(q.d);
    for (const Candidate c : zeros) {
      if (std::find(out.witness.begin(), out.witness.end(), c) == out.witness.end()) {
        out.witness.push_back(c);
      }
    }
    complete_greedily(eval, false, scored, out.witness);
    return out;
  }

  // d has first places: it ends in the top s positions, decided on P|S.
  if (q.mode == QueryMode::ExactPosition && q.k > s) return {};
  const Restriction r = restrict_profile(p, scored);
  DeterminationQuery sub = q;
  sub.d = static_cast<Candidate>(r.old_to_new[q.d]);
  sub.k = std::min(q.k, s);
  const auto inner = subset_dp_decide(r.profile, sub, limits);
  if (!inner.answer) return {};
  DeterminationResult out{true, zeros};
  for (const Candidate c : inner.witness) out.witness.push_back(r.new_to_old[c]);
  return out;
}

DeterminationResult coombs_bottomlist_decide(const Profile& p, const DeterminationQuery& q,
                                             const DeterminationLimits& limits) {
  validate(p, q);
  if (q.rule.family != RuleFamily::SeqLoser || q.rule.system.kind() != ScoringKind::Veto ||
      q.rule.system.is_reversed()) {
    throw ConfigurationError("bottom-list DP needs seqlose:veto, got " + q.rule.name());
  }
  const std::size_t n = p.num_voters();
  if (n > limits.max_voters) {
    throw ResourceError("bottom-list DP limited to " + std::to_string(limits.max_voters) +
                        " voters, got " + std::to_string(n));
  }
  if (n == 0) throw DomainError("bottom-list DP needs at least one voter");
  const std::size_t m = p.num_candidates();

  std::vector<const Ranking*> voters;
  for (const auto& g : p.groups()) {
    for (std::uint64_t i = 0; i < g.count; ++i) voters.push_back(&g.ranking);
  }
  using BottomList = std::vector<Candidate>;

  // D(x): every candidate some voter ranks below its entry in x.
  const auto below = [&](const BottomList& x) {
    CandidateMask out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t pos = voters[i]->position_of(x[i]) + 1; pos < m; ++pos) {
        out |= bit(voters[i]->at(pos));
      }
    }
    return out;
  };
  // x is valid iff it is the bottom list of P restricted to C \ D(x).
  const auto valid = [&](const BottomList& x, CandidateMask removed) {
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(removed, x[i])) return false;
    }
    return true;
  };

  BottomList start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = voters[i]->back();
  struct Node {
    BottomList prev;
    Candidate removed;
  };
  std::vector<std::map<BottomList, Node>> layers(1);
  layers[0].emplace(start, Node{{}, 0});

  const std::uint64_t targets = target_rounds(q, m);
  const std::size_t last = static_cast<std::size_t>(63 - std::countl_zero(targets));
  const std::size_t first = static_cast<std::size_t>(std::countr_zero(targets));
  std::vector<std::size_t> count(m);

  const auto losers_of = [&](const BottomList& x) {
    std::fill(count.begin(), count.end(), 0);
    std::size_t top = 0;
    for (const Candidate c : x) top = std::max(top, ++count[c]);
    CandidateMask out = 0;
    for (const Candidate c : x) {
      if (count[c] == top) out |= bit(c);
    }
    return out;
  };
  const auto witness_from = [&](std::size_t j, BottomList x) {
    std::vector<Candidate> order(j);
    for (std::size_t i = j; i > 0; --i) {
      const Node& node = layers[i].at(x);
      order[i - 1] = node.removed;
      x = node.prev;
    }
    return order;
  };

  for (std::size_t j = 0;; ++j) {
    const auto& cur = layers[j];
    if (cur.empty()) return {};
    const bool reach_suffices = q.mode == QueryMode::TopK && j == first;
    if (reach_suffices || ((targets >> j) & 1U)) {
      for (const auto& [x, node] : cur) {
        if (!reach_suffices && !contains(losers_of(x), q.d)) continue;
        DeterminationResult out{true, witness_from(j, x)};
        CandidateMask left = full_mask(m) & ~below(x);
        if (!reach_suffices) {
          out.witness.push_back(q.d);
          left &= ~bit(q.d);
        }
        const ScoreEvaluator eval(p, q.rule.system);
        complete_greedily(eval, false, left, out.witness);
        return out;
      }
    }
    if (j == last) return {};
    std::map<BottomList, Node> next;
    for (const auto& [x, node] : cur) {
      const CandidateMask removed = below(x);
      for (CandidateMask rest = losers_of(x) & ~bit(q.d); rest; rest &= rest - 1) {
        const auto c = static_cast<Candidate>(std::countr_zero(rest));
        const CandidateMask gone = removed | bit(c);
        if (gone == full_mask(m)) continue;
        BottomList y = x;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t pos = voters[i]->position_of(y[i]);
          while (contains(gone, voters[i]->at(pos))) --pos;
          y[i] = voters[i]->at(pos);
        }
        if (below(y) != gone || !valid(y, gone)) continue;
        next.emplace(std::move(y), Node{x, c});
      }
    }
    layers.push_back(std::move(next));
  }
}

std::uint64_t brute_force_positions(const Profile& p, const RuleId& rule, Candidate d,
                                    const DeterminationLimits& limits) {
  validate(p, {rule, d, 1, QueryMode::ExactPosition});
  const std::size_t m = p.num_candidates();
  if (m > limits.brute_max_candidates) {
    throw ResourceError("brute force limited to " + std::to_string(limits.brute_max_candidates) +
                        " candidates, got " + std::to_string(m));
  }
  const bool winner = rule.family == RuleFamily::SeqWinner;
  const ScoreEvaluator eval(p, rule.system);
  std::unordered_map<CandidateMask, std::uint64_t> memo;
  const auto go = [&](auto&& self, CandidateMask remaining) -> std::uint64_t {
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    const std::size_t size = popcount(remaining);
    std::uint64_t out = 0;
    for (CandidateMask rest = choices(eval, winner, remaining); rest; rest &= rest - 1) {
      const auto c = static_cast<Candidate>(std::countr_zero(rest));
      if (c == d) {
        const std::size_t pos = winner ? m - size + 1 : size;
        out |= std::uint64_t{1} << (pos - 1);
      } else {
        out |= self(self, remaining & ~bit(c));
      }
    }
    memo.emplace(remaining, out);
    return out;
  };
  return go(go, full_mask(m));
}

DeterminationResult brute_force_decide(const Profile& p, const DeterminationQuery& q,
                                       const DeterminationLimits& limits) {
  validate(p, q);
  const std::size_t m = p.num_candidates();
  const std::uint64_t wanted =
      q.mode == QueryMode::ExactPosition ? std::uint64_t{1} << (q.k - 1)
                                         : (q.k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q.k) - 1);
  if ((brute_force_positions(p, q.rule, q.d, limits) & wanted) == 0) return {};

  // Walk down again, keeping to branches that still reach a wanted position.
  const bool winner = q.rule.family == RuleFamily::SeqWinner;
  const ScoreEvaluator eval(p, q.rule.system);
  DeterminationResult out{true, {}};
  CandidateMask remaining = full_mask(m);
  while (contains(remaining, q.d)) {
    const std::size_t size = popcount(remaining);
    const std::size_t pos_d = winner ? m - size + 1 : size;
    const CandidateMask ch = choices(eval, winner, remaining);
    if (contains(ch, q.d) && ((wanted >> (pos_d - 1)) & 1U)) {
      out.witness.push_back(q.d);
      remaining &= ~bit(q.d);
      break;
    }
    for (CandidateMask rest = ch & ~bit(q.d); rest; rest &= rest - 1) {
      const auto c = static_cast<Candidate>(std::countr_zero(rest));
      const Restriction r = restrict_profile(p, remaining & ~bit(c));
      // Positions inside the restriction are offset by the candidates removed
      // so far on d's side.
      const std::uint64_t inner =
          brute_force_positions(r.profile, q.rule, static_cast<Candidate>(r.old_to_new[q.d]), limits);
      const std::size_t shift = winner ? m - size + 1 : 0;
      if (((inner << shift) & wanted) != 0) {
        out.witness.push_back(c);
        remaining &= ~bit(c);
        break;
      }
    }
  }
  complete_greedily(eval, winner, remaining, out.witness);
  return out;
}

std::vector<std::size_t> achievable_positions(const Profile& p, const RuleId& rule, Candidate d,
                                              const DeterminationLimits& limits) {
  const std::uint64_t mask = brute_force_positions(p, rule, d, limits);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < 64; ++k) {
    if ((mask >> k) & 1U) out.push_back(k + 1);
  }
  return out;
}

DeterminationResult decide(const Profile& p, const DeterminationQuery& q, DecisionAlgorithm algo,
                           const DeterminationLimits& limits) {
  switch (algo) {
    case DecisionAlgorithm::Auto:
      if (q.rule.family == RuleFamily::SeqLoser && is_plain(q.rule.system, ScoringKind::Plurality)) {
        return stv_decide(p, q, limits);
      }
      return subset_dp_decide(p, q, limits);
    case DecisionAlgorithm::SubsetDp:
      return subset_dp_decide(p, q, limits);
    case DecisionAlgorithm::Stv:
      return stv_decide(p, q, limits);
    case DecisionAlgorithm::BottomList:
      return coombs_bottomlist_decide(p, q, limits);
    case DecisionAlgorithm::Brute:
      return brute_force_decide(p, q, limits);
  }
  throw ConfigurationError("unknown algorithm");
}

}  // namespace rankagg
