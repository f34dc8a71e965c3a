#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/types.hpp"

namespace rankagg {

enum class ScoringKind { Plurality, Veto, Borda, Half, Custom };

// A family of scoring vectors, one per candidate count m.
//
//   Plurality  (1,0,...,0)
//   Veto       (0,...,0,-1)
//   Borda      (m,m-1,...,1)
//   Half       1 on the first floor(m/2) positions, 0 elsewhere
//   Custom     explicit rational vectors for the listed values of m
//
// reversed() builds s*: each vector reversed and negated. Plurality and Veto
// are each other's reversal and are returned as such; every other system
// carries a reversal flag so that reversing twice gives back the original.
class ScoringSystem {
 public:
  ScoringSystem() = default;

  static ScoringSystem plurality() { return ScoringSystem(ScoringKind::Plurality); }
  static ScoringSystem veto() { return ScoringSystem(ScoringKind::Veto); }
  static ScoringSystem borda() { return ScoringSystem(ScoringKind::Borda); }
  static ScoringSystem half() { return ScoringSystem(ScoringKind::Half); }
  static ScoringSystem custom(std::map<std::size_t, std::vector<Rational>> vectors,
                              std::string label = "custom");

  // "plurality", "veto", "borda", "half", optionally suffixed with '*'.
  static ScoringSystem from_name(std::string_view name);

  // Custom table, one line per m: "m: v_1 v_2 ... v_m" with integer or p/q
  // entries; '#' starts a comment line.
  static ScoringSystem parse_custom(std::string_view text, std::string label = "custom");

  ScoringKind kind() const noexcept { return kind_; }
  bool is_reversed() const noexcept { return reversed_; }
  std::string name() const;

  // Throws DomainError for m == 0, ConfigurationError when a custom table has
  // no vector for m.
  std::vector<Rational> vector(std::size_t m) const;

  // vector(m) scaled by the positive least common multiple of its
  // denominators; comparisons between candidates are unchanged.
  std::vector<std::int64_t> integer_vector(std::size_t m) const;

  ScoringSystem reversed() const;

  friend bool operator==(const ScoringSystem&, const ScoringSystem&) = default;

 private:
  explicit ScoringSystem(ScoringKind kind) : kind_(kind) {}

  ScoringKind kind_ = ScoringKind::Plurality;
  bool reversed_ = false;
  std::map<std::size_t, std::vector<Rational>> custom_;
  std::string label_;
};

std::vector<Rational> scoring_vector(const ScoringSystem& s, std::size_t m);

// score(c) = sum over voters of s^(m) at the voter's position of c.
std::vector<Rational> scores(const Profile& p, const ScoringSystem& s);

// Candidates with maximum (winners) or minimum (losers) score.
CandidateMask score_winners(const std::vector<Rational>& scores);
CandidateMask score_losers(const std::vector<Rational>& scores);

// Repeated score evaluation on restrictions P|R of one profile, the inner
// loop of every sequential rule. Uses the integer-scaled vectors, so values
// are comparable only within one restriction size.
class ScoreEvaluator {
 public:
  ScoreEvaluator(const Profile& p, const ScoringSystem& s);

  std::size_t num_candidates() const noexcept { return m_; }

  // out[c] for every c in `remaining`; other entries are left untouched.
  // `out` must hold at least num_candidates() entries.
  void scores(CandidateMask remaining, std::span<std::int64_t> out) const;

  CandidateMask winners(CandidateMask remaining) const;
  CandidateMask losers(CandidateMask remaining) const;

 private:
  std::size_t m_;
  std::vector<std::vector<std::int64_t>> vectors_;  // indexed by restriction size
  std::vector<Candidate> orders_;                   // groups x m, flattened
  std::vector<std::int64_t> counts_;
};

}  // namespace rankagg
