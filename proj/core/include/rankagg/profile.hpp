#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankagg/ranking.hpp"
#include "rankagg/types.hpp"

namespace rankagg {

struct VoterGroup {
  std::uint64_t count = 0;
  Ranking ranking;

  friend bool operator==(const VoterGroup&, const VoterGroup&) = default;
};

// Multiplicity-compressed list of rankings over candidates 0..m-1.
//
// Groups keep their insertion order; identical rankings are only merged by
// canonical(). The voter count n is the sum of the multiplicities. A profile
// with zero voters is representable (it is what realizing an empty majority
// graph produces) even though most rules are only meaningful for n >= 1.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t m);

  // Throws DimensionError when a ranking is not over m candidates and
  // DomainError for a zero multiplicity.
  Profile(std::size_t m, std::vector<VoterGroup> groups);

  std::size_t num_candidates() const noexcept { return m_; }
  std::uint64_t num_voters() const noexcept { return voters_; }
  std::span<const VoterGroup> groups() const noexcept { return groups_; }

  void add(const Ranking& ranking, std::uint64_t count = 1);

  // Optional display labels; empty means "use indices".
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name_of(Candidate c) const;

  // Duplicates merged, groups sorted lexicographically by ranking.
  Profile canonical() const;

  // Concatenation P + P'; both must have the same candidate count.
  friend Profile operator+(const Profile& a, const Profile& b);

  // k copies of P.
  Profile repeated(std::uint64_t k) const;

  // Equality of the voter multisets (order of groups ignored).
  bool same_voters(const Profile& other) const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.m_ == b.m_ && a.groups_ == b.groups_;
  }

 private:
  std::size_t m_ = 0;
  std::uint64_t voters_ = 0;
  std::vector<VoterGroup> groups_;
  std::vector<std::string> names_;
};

// Every ranking of the profile replaced by its reverse.
Profile reverse_profile(const Profile& p);

struct Restriction {
  Profile profile;
  // old candidate index -> new index; candidates outside `keep` map to npos.
  std::vector<std::size_t> old_to_new;
  // new index -> old index.
  std::vector<Candidate> new_to_old;
};

// P restricted to the candidates in `keep`; throws DomainError when empty.
Restriction restrict_profile(const Profile& p, CandidateMask keep);

// The ranking that more than half of the voters submit, if any.
std::optional<Ranking> majority_ranking(const Profile& p);

// Candidate that beats every other one in a strict pairwise majority, if any.
std::optional<Candidate> condorcet_winner(const Profile& p);

}  // namespace rankagg
