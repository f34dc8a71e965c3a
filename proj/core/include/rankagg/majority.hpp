#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rankagg/profile.hpp"

namespace rankagg {

// Antisymmetric matrix of pairwise margins: w(c,d) = #(c over d) - #(d over c).
class WeightedMajorityGraph {
 public:
  WeightedMajorityGraph() = default;
  explicit WeightedMajorityGraph(std::size_t m) : m_(m), w_(m * m, 0) {}

  std::size_t size() const noexcept { return m_; }
  std::int64_t operator()(Candidate c, Candidate d) const { return w_[c * m_ + d]; }
  // Sets w(c,d) = weight and w(d,c) = -weight.
  void set(Candidate c, Candidate d, std::int64_t weight);
  void add(Candidate c, Candidate d, std::int64_t weight);
  bool is_zero() const;

  friend bool operator==(const WeightedMajorityGraph&, const WeightedMajorityGraph&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::int64_t> w_;
};

WeightedMajorityGraph weighted_majority_graph(const Profile& p);

// Row sums of w. Equal to 2 Borda(c) - n(m+1) with Borda vector (m,...,1).
std::vector<std::int64_t> c2_borda_scores(const WeightedMajorityGraph& g);

// Each positive arc c->d of weight 2t becomes t pairs of voters
//   c d x_1 ... x_{m-2}   and   x_{m-2} ... x_1 c d
// with the fillers x in ascending index order. Throws DomainError for odd
// weights.
Profile mcgarvey_realize(const WeightedMajorityGraph& g);

// Arc set (C_1 x D_1) u ... u (C_s x D_s) over m candidates, blocks
// pairwise disjoint.
struct BilevelGraph {
  std::size_t m = 0;
  std::vector<std::vector<Candidate>> c_blocks;
  std::vector<std::vector<Candidate>> d_blocks;

  // Throws DomainError for overlapping or out-of-range blocks.
  void validate() const;
  // Weight 2 on every block-product arc.
  WeightedMajorityGraph graph() const;
};

// Two voters: C_1 D_1 C_2 D_2 ... C_s D_s L and rev(L) rev(C_s) rev(D_s) ...
// rev(C_1) rev(D_1), where L holds the candidates in no block. Block
// members are listed in ascending index order.
Profile bilevel_realize(const BilevelGraph& b);

// Concatenated 2-voter realizations; the parts' arc sets must be disjoint.
Profile sum_bilevel_realize(const std::vector<BilevelGraph>& parts);

// P plus `extra_pairs` copies of (identity, reversed identity).
Profile padded_opposite_pairs(const Profile& p, std::uint64_t extra_pairs);

// Graph file: header "m", then "c d w" per positive-weight arc.
WeightedMajorityGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedMajorityGraph& g);

// Bilevel file: header "m", then one block pair per line "c ... | d ...".
BilevelGraph parse_bilevel(std::string_view text);

}  // namespace rankagg
