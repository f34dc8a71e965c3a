#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/ranking.hpp"
#include "rankagg/scoring.hpp"

namespace rankagg {

enum class RuleFamily { Score, SeqWinner, SeqLoser, Kemeny };

struct RuleId {
  RuleFamily family = RuleFamily::Score;
  ScoringSystem system;  // ignored for Kemeny

  static RuleId score(ScoringSystem s) { return {RuleFamily::Score, std::move(s)}; }
  static RuleId seq_winner(ScoringSystem s) { return {RuleFamily::SeqWinner, std::move(s)}; }
  static RuleId seq_loser(ScoringSystem s) { return {RuleFamily::SeqLoser, std::move(s)}; }
  static RuleId kemeny() { return {RuleFamily::Kemeny, ScoringSystem{}}; }
  static RuleId stv() { return seq_loser(ScoringSystem::plurality()); }
  static RuleId coombs() { return seq_loser(ScoringSystem::veto()); }
  static RuleId baldwin() { return seq_loser(ScoringSystem::borda()); }

  // "score:plurality", "seqwin:borda", "seqlose:veto", "stv", "coombs",
  // "baldwin", "kemeny", "score:custom:<path>" (the table is read from disk).
  static RuleId parse(std::string_view text);
  std::string name() const;

  bool is_sequential() const noexcept {
    return family == RuleFamily::SeqWinner || family == RuleFamily::SeqLoser;
  }
  friend bool operator==(const RuleId&, const RuleId&) = default;
};

// SeqWinner(s) <-> SeqLoser(s*); Score and Kemeny map to themselves.
RuleId dual_rule(const RuleId& rule);

struct TraceRound {
  std::size_t round = 0;  // 0-based
  Candidate eliminated = 0;
  bool tie = false;
  std::size_t tied = 1;  // size of the tied set the choice was made from
};

struct ExecutionTrace {
  std::vector<TraceRound> rounds;
  Ranking output;
};

// Candidates sorted by initial score; a round is tied when at least two of
// the remaining candidates share the largest remaining score.
ExecutionTrace run_score_rule(const Profile& p, const ScoringSystem& s,
                              const TieBreakOrder& tie);
// Winners fill positions 1, 2, ...; among tied winners the one earliest in
// the tie order goes first.
ExecutionTrace run_seq_winner(const Profile& p, const ScoringSystem& s,
                              const TieBreakOrder& tie);
// Losers fill positions m, m-1, ...; among tied losers the one latest in
// the tie order is removed first.
ExecutionTrace run_seq_loser(const Profile& p, const ScoringSystem& s,
                             const TieBreakOrder& tie);
// Dispatch on the family. Kemeny picks the tie-order-earliest minimizer and
// reports a tie in every round where more than one next candidate was optimal.
ExecutionTrace run_rule(const RuleId& rule, const Profile& p, const TieBreakOrder& tie);

inline Ranking aggregate(const RuleId& rule, const Profile& p, const TieBreakOrder& tie) {
  return run_rule(rule, p, tie).output;
}

struct EnumerationOptions {
  std::size_t max_candidates = 10;
};

// The full output set f(P) under every resolution of ties. Throws
// ResourceError above max_candidates.
std::set<Ranking> enumerate_selected(const RuleId& rule, const Profile& p,
                                     const EnumerationOptions& options = {});

std::size_t tie_round_count(const ExecutionTrace& trace);

}  // namespace rankagg
