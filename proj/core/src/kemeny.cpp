#include "rankagg/kemeny.hpp"

#include <algorithm>
#include <limits>

#include "rankagg/errors.hpp"

namespace rankagg {
namespace {

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

// cost_to_go[S]: cheapest total disagreement for ordering C \ S, given S is
// already placed above it. best_next[S]: candidates achieving it.
struct KemenyTable {
  std::size_t m = 0;
  std::vector<std::uint64_t> cost_to_go;
  std::vector<CandidateMask> best_next;
};

KemenyTable build_table(const Profile& p, const KemenyOptions& options) {
  const std::size_t m = p.num_candidates();
  if (m > options.max_candidates || m > 30) {
    throw ResourceError("Kemeny DP limited to " + std::to_string(options.max_candidates) +
                        " candidates, got " + std::to_string(m));
  }
  const DisagreementMatrix dis(p);
  KemenyTable t;
  t.m = m;
  const std::size_t states = std::size_t{1} << m;
  const CandidateMask all = full_mask(m);
  t.cost_to_go.assign(states, kUnset);
  t.best_next.assign(states, 0);
  t.cost_to_go[all] = 0;
  // Decreasing masks visit supersets first.
  for (std::size_t s = states - 1; s-- > 0;) {
    const auto placed = static_cast<CandidateMask>(s);
    const CandidateMask unplaced = all & ~placed;
    std::uint64_t best = kUnset;
    CandidateMask arg = 0;
    for (CandidateMask rest = unplaced; rest; rest &= rest - 1) {
      const auto c = static_cast<Candidate>(std::countr_zero(rest));
      std::uint64_t step = 0;
      for (CandidateMask others = unplaced & ~bit(c); others; others &= others - 1) {
        step += dis(c, static_cast<Candidate>(std::countr_zero(others)));
      }
      const std::uint64_t total = step + t.cost_to_go[placed | bit(c)];
      if (total < best) {
        best = total;
        arg = bit(c);
      } else if (total == best) {
        arg |= bit(c);
      }
    }
    t.cost_to_go[placed] = best;
    t.best_next[placed] = arg;
  }
  return t;
}

void collect(const KemenyTable& t, CandidateMask placed, std::vector<Candidate>& prefix,
             KemenyResult& out, std::size_t limit) {
  if (limit != 0 && out.rankings.size() >= limit) {
    out.truncated = true;
    return;
  }
  if (prefix.size() == t.m) {
    out.rankings.emplace_back(prefix);
    return;
  }
  for (CandidateMask rest = t.best_next[placed]; rest; rest &= rest - 1) {
    const auto c = static_cast<Candidate>(std::countr_zero(rest));
    prefix.push_back(c);
    collect(t, placed | bit(c), prefix, out, limit);
    prefix.pop_back();
  }
}

}  // namespace

DisagreementMatrix::DisagreementMatrix(const Profile& p)
    : m_(p.num_candidates()), n_(p.num_voters()), cost_(m_ * m_, 0) {
  for (const auto& g : p.groups()) {
    const auto order = g.ranking.order();
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        // order[i] is preferred to order[j]: placing order[j] above order[i]
        // disagrees with these voters.
        cost_[order[j] * m_ + order[i]] += g.count;
      }
    }
  }
}

std::uint64_t kemeny_total_distance(const Ranking& r, const Profile& p) {
  if (r.size() != p.num_candidates()) {
    throw DimensionError("ranking and profile have different candidate counts");
  }
  std::uint64_t total = 0;
  for (const auto& g : p.groups()) total += g.count * swap_distance(r, g.ranking);
  return total;
}

KemenyResult kemeny_rankings(const Profile& p, const KemenyOptions& options) {
  KemenyResult out;
  if (p.num_candidates() == 0) return out;
  const auto table = build_table(p, options);
  out.optimum = table.cost_to_go[0];
  std::vector<Candidate> prefix;
  prefix.reserve(table.m);
  collect(table, 0, prefix, out, options.limit);
  return out;
}

KemenyChoice kemeny_ranking(const Profile& p, const TieBreakOrder& tie,
                            const KemenyOptions& options) {
  const std::size_t m = p.num_candidates();
  if (tie.size() != m) throw DimensionError("tie-break order does not match the profile");
  const auto table = build_table(p, options);
  KemenyChoice out;
  out.optimum = table.cost_to_go[0];
  std::vector<Candidate> order;
  CandidateMask placed = 0;
  while (order.size() < m) {
    const CandidateMask options_here = table.best_next[placed];
    Candidate pick = 0;
    std::size_t best_priority = std::numeric_limits<std::size_t>::max();
    for (CandidateMask rest = options_here; rest; rest &= rest - 1) {
      const auto c = static_cast<Candidate>(std::countr_zero(rest));
      if (tie.priority(c) < best_priority) {
        best_priority = tie.priority(c);
        pick = c;
      }
    }
    out.optimal_choices.push_back(popcount(options_here));
    order.push_back(pick);
    placed |= bit(pick);
  }
  out.ranking = Ranking(std::move(order));
  return out;
}

Rational position_displacement(const Ranking& a, const Ranking& b, std::size_t position) {
  if (a.size() != b.size()) throw DimensionError("position_displacement: size mismatch");
  if (position < 1 || position > a.size()) {
    throw DomainError("position " + std::to_string(position) + " outside [1, " +
                      std::to_string(a.size()) + "]");
  }
  const auto i = static_cast<std::int64_t>(position);
  const auto pa = static_cast<std::int64_t>(a.position_of(b.at(position - 1)) + 1);
  const auto pb = static_cast<std::int64_t>(b.position_of(a.at(position - 1)) + 1);
  return Rational(std::abs(i - pa) + std::abs(i - pb), 2);
}

}  // namespace rankagg
