#include "rankagg/rules.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <memory>
#include <numeric>

#include "rankagg/errors.hpp"
#include "rankagg/kemeny.hpp"
#include "rankagg/profile_io.hpp"

namespace rankagg {
namespace {

void check_tie(const Profile& p, const TieBreakOrder& tie) {
  if (tie.size() != p.num_candidates()) {
    throw DimensionError("tie-break order has " + std::to_string(tie.size()) +
                         " candidates, profile has " + std::to_string(p.num_candidates()));
  }
  if (p.num_candidates() > kMaxMaskCandidates) {
    throw ResourceError("rules are limited to 64 candidates");
  }
}

Candidate earliest(CandidateMask set, const TieBreakOrder& tie) {
  Candidate pick = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (; set; set &= set - 1) {
    const auto c = static_cast<Candidate>(std::countr_zero(set));
    if (tie.priority(c) < best) {
      best = tie.priority(c);
      pick = c;
    }
  }
  return pick;
}

Candidate latest(CandidateMask set, const TieBreakOrder& tie) {
  Candidate pick = 0;
  std::size_t best = 0;
  bool first = true;
  for (; set; set &= set - 1) {
    const auto c = static_cast<Candidate>(std::countr_zero(set));
    if (first || tie.priority(c) > best) {
      best = tie.priority(c);
      pick = c;
      first = false;
    }
  }
  return pick;
}

// Initial scores as integers (scaled by the vector's denominator LCM).
std::vector<std::int64_t> initial_scores(const Profile& p, const ScoringSystem& s) {
  const std::size_t m = p.num_candidates();
  const auto v = s.integer_vector(m);
  std::vector<std::int64_t> out(m, 0);
  for (const auto& g : p.groups()) {
    const auto order = g.ranking.order();
    for (std::size_t i = 0; i < m; ++i) {
      out[order[i]] += static_cast<std::int64_t>(g.count) * v[i];
    }
  }
  return out;
}

// Score classes: maximal groups of candidates sharing a score, best first.
std::vector<CandidateMask> score_classes(const std::vector<std::int64_t>& sc) {
  std::vector<Candidate> idx(sc.size());
  std::iota(idx.begin(), idx.end(), Candidate{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Candidate a, Candidate b) { return sc[a] > sc[b]; });
  std::vector<CandidateMask> classes;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || sc[idx[i]] != sc[idx[i - 1]]) classes.push_back(0);
    classes.back() |= bit(idx[i]);
  }
  return classes;
}

using Suffixes = std::vector<std::vector<Candidate>>;

// Orderings of `remaining` reachable by the sequential rule, in elimination
// order. Memoized on the remaining set so merging branches share work.
class SequentialEnumerator {
 public:
  SequentialEnumerator(const Profile& p, const ScoringSystem& s, bool winner)
      : eval_(p, s), winner_(winner) {}

  const Suffixes& run(CandidateMask remaining) {
    auto it = memo_.find(remaining);
    if (it != memo_.end()) return it->second;
    Suffixes out;
    if (popcount(remaining) == 1) {
      out.push_back({static_cast<Candidate>(std::countr_zero(remaining))});
    } else {
      const CandidateMask choices = winner_ ? eval_.winners(remaining) : eval_.losers(remaining);
      for (CandidateMask rest = choices; rest; rest &= rest - 1) {
        const auto c = static_cast<Candidate>(std::countr_zero(rest));
        const Suffixes& tails = run(remaining & ~bit(c));
        for (const auto& tail : tails) {
          std::vector<Candidate> seq;
          seq.reserve(tail.size() + 1);
          seq.push_back(c);
          seq.insert(seq.end(), tail.begin(), tail.end());
          out.push_back(std::move(seq));
        }
      }
    }
    return memo_.emplace(remaining, std::move(out)).first->second;
  }

 private:
  ScoreEvaluator eval_;
  bool winner_;
  std::map<CandidateMask, Suffixes> memo_;
};

void permute_classes(const std::vector<CandidateMask>& classes, std::size_t at,
                     std::vector<Candidate>& prefix, std::set<Ranking>& out) {
  if (at == classes.size()) {
    out.emplace(prefix);
    return;
  }
  std::vector<Candidate> members;
  for (CandidateMask rest = classes[at]; rest; rest &= rest - 1) {
    members.push_back(static_cast<Candidate>(std::countr_zero(rest)));
  }
  do {
    const std::size_t base = prefix.size();
    prefix.insert(prefix.end(), members.begin(), members.end());
    permute_classes(classes, at + 1, prefix, out);
    prefix.resize(base);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

RuleId RuleId::parse(std::string_view text) {
  const std::string t(text);
  if (t == "stv") return stv();
  if (t == "coombs") return coombs();
  if (t == "baldwin") return baldwin();
  if (t == "kemeny") return kemeny();
  const auto colon = t.find(':');
  if (colon == std::string::npos) throw ConfigurationError("unknown rule '" + t + "'");
  const std::string family = t.substr(0, colon);
  const std::string rest = t.substr(colon + 1);
  ScoringSystem s;
  if (rest.rfind("custom:", 0) == 0) {
    const std::string path = rest.substr(7);
    if (path.empty()) throw ConfigurationError("custom rule needs a path: '" + t + "'");
    s = ScoringSystem::parse_custom(read_text_file(path), path);
  } else {
    s = ScoringSystem::from_name(rest);
  }
  if (family == "score") return score(s);
  if (family == "seqwin") return seq_winner(s);
  if (family == "seqlose") return seq_loser(s);
  throw ConfigurationError("unknown rule family '" + family + "'");
}

std::string RuleId::name() const {
  switch (family) {
    case RuleFamily::Score:
      return "score:" + system.name();
    case RuleFamily::SeqWinner:
      return "seqwin:" + system.name();
    case RuleFamily::SeqLoser:
      return "seqlose:" + system.name();
    case RuleFamily::Kemeny:
      return "kemeny";
  }
  return "?";
}

RuleId dual_rule(const RuleId& rule) {
  switch (rule.family) {
    case RuleFamily::SeqWinner:
      return RuleId::seq_loser(rule.system.reversed());
    case RuleFamily::SeqLoser:
      return RuleId::seq_winner(rule.system.reversed());
    default:
      return rule;
  }
}

ExecutionTrace run_score_rule(const Profile& p, const ScoringSystem& s, const TieBreakOrder& tie) {
  check_tie(p, tie);
  const std::size_t m = p.num_candidates();
  ExecutionTrace trace;
  if (m == 0) return trace;
  const auto sc = initial_scores(p, s);
  std::vector<Candidate> order;
  order.reserve(m);
  for (const CandidateMask cls : score_classes(sc)) {
    // Within a class the tie order decides; every round until the class is
    // down to one member is a tie round.
    std::vector<Candidate> members;
    for (CandidateMask rest = cls; rest; rest &= rest - 1) {
      members.push_back(static_cast<Candidate>(std::countr_zero(rest)));
    }
    std::sort(members.begin(), members.end(),
              [&](Candidate a, Candidate b) { return tie.priority(a) < tie.priority(b); });
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t tied = members.size() - i;
      trace.rounds.push_back({order.size(), members[i], tied >= 2, tied});
      order.push_back(members[i]);
    }
  }
  trace.output = Ranking(std::move(order));
  return trace;
}

ExecutionTrace run_seq_winner(const Profile& p, const ScoringSystem& s, const TieBreakOrder& tie) {
  check_tie(p, tie);
  const std::size_t m = p.num_candidates();
  ExecutionTrace trace;
  if (m == 0) return trace;
  const ScoreEvaluator eval(p, s);
  CandidateMask remaining = full_mask(m);
  std::vector<Candidate> order;
  order.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const CandidateMask w = eval.winners(remaining);
    const Candidate c = earliest(w, tie);
    trace.rounds.push_back({r, c, popcount(w) >= 2, popcount(w)});
    order.push_back(c);
    remaining &= ~bit(c);
  }
  trace.output = Ranking(std::move(order));
  return trace;
}

ExecutionTrace run_seq_loser(const Profile& p, const ScoringSystem& s, const TieBreakOrder& tie) {
  check_tie(p, tie);
  const std::size_t m = p.num_candidates();
  ExecutionTrace trace;
  if (m == 0) return trace;
  const ScoreEvaluator eval(p, s);
  CandidateMask remaining = full_mask(m);
  std::vector<Candidate> order(m);
  for (std::size_t r = 0; r < m; ++r) {
    const CandidateMask l = eval.losers(remaining);
    const Candidate c = latest(l, tie);
    trace.rounds.push_back({r, c, popcount(l) >= 2, popcount(l)});
    order[m - 1 - r] = c;
    remaining &= ~bit(c);
  }
  trace.output = Ranking(std::move(order));
  return trace;
}

ExecutionTrace run_rule(const RuleId& rule, const Profile& p, const TieBreakOrder& tie) {
  switch (rule.family) {
    case RuleFamily::Score:
      return run_score_rule(p, rule.system, tie);
    case RuleFamily::SeqWinner:
      return run_seq_winner(p, rule.system, tie);
    case RuleFamily::SeqLoser:
      return run_seq_loser(p, rule.system, tie);
    case RuleFamily::Kemeny: {
      check_tie(p, tie);
      const auto choice = kemeny_ranking(p, tie);
      ExecutionTrace trace;
      for (std::size_t r = 0; r < choice.ranking.size(); ++r) {
        const std::size_t k = choice.optimal_choices[r];
        trace.rounds.push_back({r, choice.ranking.at(r), k >= 2, k});
      }
      trace.output = choice.ranking;
      return trace;
    }
  }
  throw ConfigurationError("unknown rule family");
}

std::set<Ranking> enumerate_selected(const RuleId& rule, const Profile& p,
                                     const EnumerationOptions& options) {
  const std::size_t m = p.num_candidates();
  if (m > options.max_candidates) {
    throw ResourceError("enumeration limited to " + std::to_string(options.max_candidates) +
                        " candidates, got " + std::to_string(m));
  }
  std::set<Ranking> out;
  if (m == 0) return out;
  switch (rule.family) {
    case RuleFamily::Score: {
      std::vector<Candidate> prefix;
      permute_classes(score_classes(initial_scores(p, rule.system)), 0, prefix, out);
      break;
    }
    case RuleFamily::SeqWinner:
    case RuleFamily::SeqLoser: {
      const bool winner = rule.family == RuleFamily::SeqWinner;
      SequentialEnumerator e(p, rule.system, winner);
      for (auto seq : e.run(full_mask(m))) {
        if (!winner) std::reverse(seq.begin(), seq.end());
        out.emplace(std::move(seq));
      }
      break;
    }
    case RuleFamily::Kemeny: {
      KemenyOptions ko;
      ko.max_candidates = std::max(ko.max_candidates, options.max_candidates);
      for (auto& r : kemeny_rankings(p, ko).rankings) out.insert(std::move(r));
      break;
    }
  }
  return out;
}

std::size_t tie_round_count(const ExecutionTrace& trace) {
  return static_cast<std::size_t>(
      std::count_if(trace.rounds.begin(), trace.rounds.end(), [](const TraceRound& r) { return r.tie; }));
}

}  // namespace rankagg
