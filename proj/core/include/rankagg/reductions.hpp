#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankagg/determination.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/profile.hpp"
#include "rankagg/rules.hpp"

namespace rankagg {

// CNF over variables 1..variables; literals are DIMACS integers (+v / -v).
struct SatFormula {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;

  // Every clause has 1..3 distinct literals and every literal, positive and
  // negative, occurs exactly twice. Throws DomainError otherwise.
  void validate_occurrences() const;
};

// Simple undirected graph on vertices 0..q-1.
struct GraphInstance {
  std::size_t q = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Throws DomainError for loops, repeated edges or endpoints out of range.
  void validate() const;
  std::vector<std::size_t> degrees() const;
  bool is_cubic() const;
  // Common degree, if every vertex has the same one.
  std::optional<std::size_t> regular_degree() const;
  // Incident edge indices per vertex, ascending.
  std::vector<std::vector<std::size_t>> incidence() const;
};

GraphInstance complete_graph(std::size_t q);
GraphInstance cycle_graph(std::size_t q);

// Universe 0..universe-1.
struct HittingSetInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t target = 0;

  void validate() const;
};

// A determination question produced by a reduction.
struct ReductionInstance {
  Profile profile;
  RuleId rule;
  DeterminationQuery query;
};

// STV winner determination from occurrence-restricted SAT. Candidates: d, w,
// one per clause, then x_1, not x_1, x_2, ...; groups of 100 / 99 / 98 / 60
// / 2 voters, with every "..." completed in ascending index order.
ReductionInstance stv_from_sat(const SatFormula& f);

// STV winner determination from vertex cover on a cubic graph. Candidates:
// d, w, q, v_1..v_n, v'_1..v'_n, e_1..e_|E| (2n + |E| + 3 in total).
ReductionInstance stv_from_cubic_vc(const GraphInstance& g, std::size_t t);

// Coombs winner determination from clique on a regular graph. Candidates:
// d, w, the vertices, then one dummy s_v per vertex; "..." is ascending
// index order, which puts d first. Needs k >= 3: for k <= 2 the initial
// bottom counts of d and w coincide and the equivalence breaks.
ReductionInstance coombs_from_regular_clique(const GraphInstance& g, std::size_t k);

// Candidate layout of the 8-voter Baldwin construction.
struct Baldwin8Layout {
  std::size_t q = 0;
  std::size_t edges = 0;
  std::size_t t = 0;
  Candidate vertex(std::size_t v) const { return static_cast<Candidate>(v); }
  Candidate edge(std::size_t e) const { return static_cast<Candidate>(q + e); }
  Candidate d() const { return static_cast<Candidate>(q + edges); }
  Candidate b(std::size_t i) const { return d() + 1 + static_cast<Candidate>(i); }  // 4
  Candidate f(std::size_t i) const { return d() + 5 + static_cast<Candidate>(i); }  // q-t+8
  Candidate g() const { return f(q - t + 8); }
  Candidate h(std::size_t i) const { return g() + 1 + static_cast<Candidate>(i); }  // 4
  Candidate k(std::size_t i) const { return g() + 5 + static_cast<Candidate>(i); }  // 5
  std::size_t num_candidates() const { return q + edges + 1 + 4 + (q - t + 8) + 1 + 4 + 5; }
};

Baldwin8Layout baldwin8_layout(const GraphInstance& g, std::size_t t);
// The four bilevel arc sets A_1..A_4.
std::vector<BilevelGraph> baldwin8_parts(const GraphInstance& g, std::size_t t);
// The target majority graph A, all arcs of weight 2, built from its
// description rather than from the parts.
WeightedMajorityGraph baldwin8_target_graph(const GraphInstance& g, std::size_t t);
// Baldwin winner determination for d on the 8-voter realization.
ReductionInstance baldwin8_from_cubic_vc(const GraphInstance& g, std::size_t t);
// Elimination order for a vertex cover `cover` of size t: the cover, then
// B, then the edges (both endpoints covered first), H, the remaining
// dummies, and d last.
std::vector<Candidate> baldwin8_cover_order(const GraphInstance& g, std::size_t t,
                                            const std::vector<std::size_t>& cover);

// Sequential-Winner Veto top-(l+1) determination from hitting set.
// Candidates: d, b, c_u per element, e_S per set.
ReductionInstance seqwi_veto_topk_from_hitting_set(const HittingSetInstance& inst);

// True iff every candidate of `order` is a legal choice (winner or loser)
// of the profile restricted to the candidates not yet removed.
bool witness_replay(const Profile& p, const std::vector<Candidate>& order, const RuleId& rule);

// Exhaustive ground truth, limited to 20 variables / vertices / elements.
bool sat_brute(const SatFormula& f);
bool vc_brute(const GraphInstance& g, std::size_t t);
bool clique_brute(const GraphInstance& g, std::size_t k);
bool hitting_brute(const HittingSetInstance& inst);

// Fixture families.
std::vector<GraphInstance> all_cubic_graphs(std::size_t q);
std::vector<GraphInstance> all_regular_graphs(std::size_t q);
std::vector<SatFormula> all_occurrence_formulas(std::size_t variables);
std::vector<HittingSetInstance> all_hitting_set_instances(std::size_t universe,
                                                          std::size_t max_sets);

// Instance files. CNF: DIMACS "p cnf v c" with 0-terminated clauses.
// Graph: "p edge q m", then "e u v" per edge (1-based), plus "t <k>".
// Hitting set: "U <size>", "t <target>", then one set per line (1-based).
SatFormula parse_dimacs_cnf(std::string_view text);
std::pair<GraphInstance, std::size_t> parse_graph_instance(std::string_view text);
HittingSetInstance parse_hitting_set(std::string_view text);

}  // namespace rankagg
