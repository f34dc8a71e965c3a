#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankagg/types.hpp"

namespace rankagg {

// A strict linear order over candidates 0..m-1, most preferred first.
//
// Positions are 0-based in this interface. Call sites that speak in the
// 1-based positions of the problem statements (determination queries,
// position displacement) convert at their boundary.
class Ranking {
 public:
  Ranking() = default;

  // Throws DomainError unless `order` is a permutation of 0..size-1.
  explicit Ranking(std::vector<Candidate> order);

  static Ranking identity(std::size_t m);

  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  Candidate at(std::size_t position) const { return order_.at(position); }
  std::size_t position_of(Candidate c) const { return position_.at(c); }
  bool prefers(Candidate a, Candidate b) const { return position_of(a) < position_of(b); }

  std::span<const Candidate> order() const noexcept { return order_; }
  Candidate front() const { return order_.front(); }
  Candidate back() const { return order_.back(); }

  // Space-separated indices, e.g. "0 2 1".
  std::string to_string() const;

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<Candidate> order_;
  std::vector<std::size_t> position_;
};

// Priority list consulted whenever a round has several tied candidates.
// Earlier entries are preferred: among tied winners the earliest is promoted,
// among tied losers the latest is demoted.
class TieBreakOrder {
 public:
  TieBreakOrder() = default;
  explicit TieBreakOrder(Ranking order) : order_(std::move(order)) {}

  static TieBreakOrder identity(std::size_t m) { return TieBreakOrder(Ranking::identity(m)); }

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t priority(Candidate c) const { return order_.position_of(c); }
  const Ranking& ranking() const noexcept { return order_; }

  // Tie order for the candidates in `keep`, renumbered as restrict() does.
  TieBreakOrder restricted(CandidateMask keep) const;

  friend bool operator==(const TieBreakOrder&, const TieBreakOrder&) = default;

 private:
  Ranking order_;
};

std::size_t swap_distance(const Ranking& a, const Ranking& b);

// swap_distance / (m choose 2); requires m >= 2.
Rational normalized_swap_distance(const Ranking& a, const Ranking& b);

Ranking reverse_ranking(const Ranking& r);

// Ranking over the candidates of `keep`, renumbered densely in ascending
// index order; relative order of survivors is preserved.
Ranking restrict_ranking(const Ranking& r, CandidateMask keep);

// old index -> new index for the members of `keep` (non-members map to npos).
std::vector<std::size_t> restriction_map(std::size_t m, CandidateMask keep);

// Builds a ranking from its candidate sequence without renumbering, e.g.
// "a b c" -> indices parsed elsewhere. Mostly a test convenience.
Ranking make_ranking(std::initializer_list<Candidate> order);

}  // namespace rankagg
