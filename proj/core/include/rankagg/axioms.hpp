#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/rules.hpp"

namespace rankagg {

enum class AxiomId {
  IndependenceTop,
  IndependenceBottom,
  Reinforcement,
  ReinforcementTop,
  ReinforcementBottom,
  CondorcetWinnerTop,
  CopyMajority,
  IndependenceClonesTop,
};

// "independence-top", "independence-bottom", "reinforcement",
// "reinforcement-top", "reinforcement-bottom", "condorcet-top",
// "copy-majority", "clones-top".
AxiomId parse_axiom(std::string_view name);
std::string axiom_name(AxiomId a);
const std::vector<AxiomId>& all_axioms();

// The data an axiom is checked on: one profile, a second profile for the
// reinforcement axioms, a clone set for independence of clones.
struct AxiomWitness {
  Profile first;
  std::optional<Profile> second;
  std::vector<Candidate> clones;
};

struct AxiomCheck {
  bool holds = true;
  std::string details;  // why it failed; empty when it holds
};

// Checks one instance against the set-valued rule (enumerate_selected).
// Clone sets must be consecutive in every vote (DomainError otherwise);
// the replacement profile keeps the lowest-index clone as the merged
// candidate and the rule's output must collapse onto the output on it.
AxiomCheck check_axiom_instance(AxiomId axiom, const RuleId& rule, const AxiomWitness& w,
                                const EnumerationOptions& options = {});

struct SearchOptions {
  std::size_t m_max = 4;
  std::size_t n_max = 7;
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 0;
  std::size_t shards = 4;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct Counterexample {
  AxiomWitness witness;
  std::string details;
  std::uint64_t shard = 0;
  std::uint64_t index = 0;  // sample index within the shard
};

// Samples witnesses and returns the first violation. The budget is split
// over a fixed number of shards, each with its own derived seed; when
// several shards find one, the lowest shard index wins, so the result does
// not depend on the thread count.
//
// Profiles are impartial culture with m in [2, m_max] and n in [1, n_max].
// Copy-majority witnesses plant a majority ranking; clone witnesses copy a
// random candidate next to itself in every vote.
std::optional<Counterexample> search_counterexample(AxiomId axiom, const RuleId& rule,
                                                    const SearchOptions& options);

}  // namespace rankagg
