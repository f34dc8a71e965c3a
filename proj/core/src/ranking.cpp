#include "rankagg/ranking.hpp"

#include <limits>
#include <sstream>

#include "rankagg/errors.hpp"

namespace rankagg {

Ranking::Ranking(std::vector<Candidate> order) : order_(std::move(order)) {
  const std::size_t m = order_.size();
  position_.assign(m, std::numeric_limits<std::size_t>::max());
  for (std::size_t p = 0; p < m; ++p) {
    const Candidate c = order_[p];
    if (c >= m) {
      throw DomainError("ranking entry " + std::to_string(c) + " out of range for m=" +
                        std::to_string(m));
    }
    if (position_[c] != std::numeric_limits<std::size_t>::max()) {
      throw DomainError("candidate " + std::to_string(c) + " appears twice in ranking");
    }
    position_[c] = p;
  }
}

Ranking Ranking::identity(std::size_t m) {
  std::vector<Candidate> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<Candidate>(i);
  return Ranking(std::move(order));
}

std::string Ranking::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out << ' ';
    out << order_[i];
  }
  return out.str();
}

TieBreakOrder TieBreakOrder::restricted(CandidateMask keep) const {
  return TieBreakOrder(restrict_ranking(order_, keep));
}

std::size_t swap_distance(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) {
    throw DimensionError("swap_distance: rankings over " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " candidates");
  }
  // Relabel so that `a` becomes the identity; the distance is the number of
  // inversions in the relabelled `b`.
  const std::size_t m = a.size();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t pi = a.position_of(b.at(i));
    for (std::size_t j = i + 1; j < m; ++j) {
      if (pi > a.position_of(b.at(j))) ++inversions;
    }
  }
  return inversions;
}

Rational normalized_swap_distance(const Ranking& a, const Ranking& b) {
  if (a.size() < 2 || b.size() < 2) {
    throw DomainError("normalized swap distance needs at least two candidates");
  }
  const auto m = static_cast<std::int64_t>(a.size());
  return Rational(static_cast<std::int64_t>(swap_distance(a, b)), m * (m - 1) / 2);
}

Ranking reverse_ranking(const Ranking& r) {
  std::vector<Candidate> order(r.order().rbegin(), r.order().rend());
  return Ranking(std::move(order));
}

std::vector<std::size_t> restriction_map(std::size_t m, CandidateMask keep) {
  std::vector<std::size_t> map(m, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (contains(keep, static_cast<Candidate>(c))) map[c] = next++;
  }
  return map;
}

Ranking restrict_ranking(const Ranking& r, CandidateMask keep) {
  const auto map = restriction_map(r.size(), keep);
  std::vector<Candidate> order;
  order.reserve(popcount(keep));
  for (Candidate c : r.order()) {
    if (contains(keep, c)) order.push_back(static_cast<Candidate>(map[c]));
  }
  if (order.empty()) throw DomainError("restriction to an empty candidate set");
  return Ranking(std::move(order));
}

Ranking make_ranking(std::initializer_list<Candidate> order) {
  return Ranking(std::vector<Candidate>(order));
}

}  // namespace rankagg
