#include "rankagg/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "rankagg/errors.hpp"

namespace rankagg {
namespace {

constexpr std::size_t kBruteLimit = 20;

// `listed` on top, everything else below in ascending index order.
Ranking top(std::size_t m, std::initializer_list<Candidate> listed) {
  std::vector<Candidate> order(listed);
  std::vector<bool> used(m, false);
  for (const Candidate c : order) used[c] = true;
  for (Candidate c = 0; c < m; ++c) {
    if (!used[c]) order.push_back(c);
  }
  return Ranking(std::move(order));
}

// Everything else in ascending index order, `listed` at the bottom.
Ranking bottom(std::size_t m, std::initializer_list<Candidate> listed) {
  std::vector<bool> used(m, false);
  for (const Candidate c : listed) used[c] = true;
  std::vector<Candidate> order;
  for (Candidate c = 0; c < m; ++c) {
    if (!used[c]) order.push_back(c);
  }
  order.insert(order.end(), listed.begin(), listed.end());
  return Ranking(std::move(order));
}

ReductionInstance winner_instance(Profile p, RuleId rule, Candidate d) {
  ReductionInstance out{std::move(p), rule, {}};
  out.query = {std::move(rule), d, 1, QueryMode::ExactPosition};
  return out;
}

std::size_t literal_index(int lit) {
  const auto v = static_cast<std::size_t>(std::abs(lit)) - 1;
  return 2 * v + (lit < 0 ? 1 : 0);
}

void check_brute(std::size_t size, const char* what) {
  if (size > kBruteLimit) {
    throw ResourceError(std::string("brute force limited to 20 ") + what + ", got " +
                        std::to_string(size));
  }
}

bool is_vertex_cover(const GraphInstance& g, std::uint64_t chosen) {
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return ((chosen >> e.first) & 1U) || ((chosen >> e.second) & 1U);
  });
}

}  // namespace

void SatFormula::validate_occurrences() const {
  std::vector<std::size_t> seen(2 * variables, 0);
  for (const auto& clause : clauses) {
    if (clause.empty() || clause.size() > 3) throw DomainError("clauses need 1 to 3 literals");
    std::set<int> distinct(clause.begin(), clause.end());
    if (distinct.size() != clause.size()) throw DomainError("repeated literal in a clause");
    for (const int lit : clause) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables) {
        throw DomainError("literal " + std::to_string(lit) + " out of range");
      }
      ++seen[literal_index(lit)];
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 2) {
      throw DomainError("literal " + std::string(i % 2 ? "-" : "") + std::to_string(i / 2 + 1) +
                        " occurs " + std::to_string(seen[i]) + " times, expected 2");
    }
  }
}

void GraphInstance::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges) {
    if (u >= q || v >= q) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) throw DomainError("repeated edge");
  }
}

std::vector<std::size_t> GraphInstance::degrees() const {
  std::vector<std::size_t> deg(q, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool GraphInstance::is_cubic() const {
  const auto r = regular_degree();
  return r && *r == 3;
}

std::optional<std::size_t> GraphInstance::regular_degree() const {
  validate();
  const auto deg = degrees();
  if (deg.empty()) return std::size_t{0};
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
    return std::nullopt;
  }
  return deg.front();
}

std::vector<std::vector<std::size_t>> GraphInstance::incidence() const {
  std::vector<std::vector<std::size_t>> out(q);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out[edges[e].first].push_back(e);
    out[edges[e].second].push_back(e);
  }
  return out;
}

GraphInstance complete_graph(std::size_t q) {
  GraphInstance g{q, {}};
  for (std::size_t u = 0; u < q; ++u) {
    for (std::size_t v = u + 1; v < q; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

GraphInstance cycle_graph(std::size_t q) {
  GraphInstance g{q, {}};
  for (std::size_t u = 0; u < q; ++u) g.edges.emplace_back(u, (u + 1) % q);
  g.validate();
  return g;
}

void HittingSetInstance::validate() const {
  if (target > universe) throw DomainError("hitting set target exceeds the universe");
  for (const auto& s : sets) {
    std::set<std::size_t> distinct(s.begin(), s.end());
    if (distinct.size() != s.size()) throw DomainError("repeated element in a set");
    for (const std::size_t u : s) {
      if (u >= universe) throw DomainError("set element out of range");
    }
  }
}

ReductionInstance stv_from_sat(const SatFormula& f) {
  f.validate_occurrences();
  const std::size_t clauses = f.clauses.size();
  const std::size_t m = 2 + clauses + 2 * f.variables;
  const Candidate d = 0;
  const Candidate w = 1;
  const auto clause = [](std::size_t j) { return static_cast<Candidate>(2 + j); };
  const auto literal = [&](std::size_t i) { return static_cast<Candidate>(2 + clauses + i); };

  Profile p(m);
  p.add(top(m, {d}), 100);
  p.add(top(m, {w, d}), 99);
  for (std::size_t j = 0; j < clauses; ++j) p.add(top(m, {clause(j), w, d}), 98);
  for (std::size_t i = 0; i < 2 * f.variables; ++i) {
    p.add(top(m, {literal(i), literal(i ^ 1U), w, d}), 60);
  }
  for (std::size_t j = 0; j < clauses; ++j) {
    for (const int lit : f.clauses[j]) p.add(top(m, {literal(literal_index(lit)), clause(j), w, d}), 2);
  }
  std::vector<std::string> names{"d", "w"};
  for (std::size_t j = 0; j < clauses; ++j) names.push_back("c" + std::to_string(j + 1));
  for (std::size_t v = 1; v <= f.variables; ++v) {
    names.push_back("x" + std::to_string(v));
    names.push_back("~x" + std::to_string(v));
  }
  p.set_names(std::move(names));
  return winner_instance(std::move(p), RuleId::stv(), d);
}

ReductionInstance stv_from_cubic_vc(const GraphInstance& g, std::size_t t) {
  if (!g.is_cubic()) throw DomainError("vertex cover reduction needs a cubic graph");
  const std::size_t n = g.q;
  if (t > n) throw DomainError("cover size exceeds the vertex count");
  const std::size_t edges = g.edges.size();
  const std::size_t m = 2 * n + edges + 3;
  const Candidate d = 0;
  const Candidate w = 1;
  const Candidate qc = 2;
  const auto v = [](std::size_t i) { return static_cast<Candidate>(3 + i); };
  const auto vp = [n](std::size_t i) { return static_cast<Candidate>(3 + n + i); };
  const auto e = [n](std::size_t j) { return static_cast<Candidate>(3 + 2 * n + j); };
  const auto inc = g.incidence();

  Profile p(m);
  p.add(top(m, {d, w}), 105 * n);
  p.add(top(m, {w, d}), 99 * n);
  for (std::size_t j = 0; j < edges; ++j) p.add(top(m, {e(j), w, d}), 99 * n - 1);
  p.add(top(m, {qc, w, d}), 99 * n - 3 * (n - t));
  for (std::size_t i = 0; i < n; ++i) {
    p.add(top(m, {v(i), vp(i), w, d}), 60 * n - 3);
    for (const std::size_t j : inc[i]) p.add(top(m, {v(i), e(j), w, d}), 1);
    p.add(top(m, {vp(i), v(i), w, d}), 60 * n - 3);
    p.add(top(m, {vp(i), qc, w, d}), 3);
  }
  std::vector<std::string> names{"d", "w", "q"};
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("v'" + std::to_string(i + 1));
  for (std::size_t j = 0; j < edges; ++j) names.push_back("e" + std::to_string(j + 1));
  p.set_names(std::move(names));
  return winner_instance(std::move(p), RuleId::stv(), d);
}

ReductionInstance coombs_from_regular_clique(const GraphInstance& g, std::size_t k) {
  const auto r = g.regular_degree();
  if (!r) throw DomainError("clique reduction needs a regular graph");
  if (k < 3) throw DomainError("clique reduction needs k >= 3");
  const std::size_t q = g.q;
  const std::size_t m = 2 * q + 2;
  const Candidate d = 0;
  const Candidate w = 1;
  const auto v = [](std::size_t i) { return static_cast<Candidate>(2 + i); };
  const auto s = [q](std::size_t i) { return static_cast<Candidate>(2 + q + i); };
  const std::uint64_t kk = k * (k - 2);

  Profile p(m);
  p.add(bottom(m, {d}), kk + *r + 1);
  p.add(bottom(m, {w}), *r + 1);
  for (std::size_t i = 0; i < q; ++i) {
    if (kk > 0) p.add(bottom(m, {s(i), v(i)}), kk);
    p.add(bottom(m, {d, v(i)}), 1);
  }
  for (const auto& [a, b] : g.edges) {
    p.add(bottom(m, {w, v(a), v(b)}), 1);
    p.add(bottom(m, {w, v(b), v(a)}), 1);
  }
  std::vector<std::string> names{"d", "w"};
  for (std::size_t i = 0; i < q; ++i) names.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < q; ++i) names.push_back("s" + std::to_string(i + 1));
  p.set_names(std::move(names));
  return winner_instance(std::move(p), RuleId::coombs(), d);
}

Baldwin8Layout baldwin8_layout(const GraphInstance& g, std::size_t t) {
  if (!g.is_cubic()) throw DomainError("Baldwin reduction needs a cubic graph");
  if (t > g.q) throw DomainError("cover size exceeds the vertex count");
  return {g.q, g.edges.size(), t};
}

std::vector<BilevelGraph> baldwin8_parts(const GraphInstance& g, std::size_t t) {
  const auto L = baldwin8_layout(g, t);
  const std::size_t m = L.num_candidates();
  const auto inc = g.incidence();
  const auto range = [](auto pick, std::size_t count) {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(pick(i));
    return out;
  };
  const auto bs = range([&](std::size_t i) { return L.b(i); }, 4);
  const auto fs = range([&](std::size_t i) { return L.f(i); }, g.q - t + 8);
  const auto hs = range([&](std::size_t i) { return L.h(i); }, 4);
  const auto ks = range([&](std::size_t i) { return L.k(i); }, 5);
  const auto vs = range([&](std::size_t i) { return L.vertex(i); }, g.q);
  const auto es = range([&](std::size_t i) { return L.edge(i); }, L.edges);

  std::vector<BilevelGraph> parts(4, BilevelGraph{m, {}, {}});
  parts[0].c_blocks = {bs, hs};
  parts[0].c_blocks[1].push_back(L.g());
  parts[0].d_blocks = {vs, es};
  // Part 1 + i holds the arcs (e_v^{i+1}, v): one block per edge, since an
  // edge can be the same-numbered incident edge of both its endpoints.
  for (std::size_t i = 0; i < 3; ++i) {
    auto& part = parts[1 + i];
    for (std::size_t e = 0; e < L.edges; ++e) {
      std::vector<Candidate> heads;
      for (std::size_t v = 0; v < g.q; ++v) {
        if (inc[v][i] == e) heads.push_back(L.vertex(v));
      }
      if (heads.empty()) continue;
      part.c_blocks.push_back({L.edge(e)});
      part.d_blocks.push_back(std::move(heads));
    }
  }
  parts[1].c_blocks.push_back(fs);
  parts[1].d_blocks.push_back(bs);
  parts[2].c_blocks.push_back(ks);
  parts[2].d_blocks.push_back(hs);
  parts[3].c_blocks.push_back(hs);
  parts[3].d_blocks.push_back({L.d()});
  return parts;
}

WeightedMajorityGraph baldwin8_target_graph(const GraphInstance& g, std::size_t t) {
  const auto L = baldwin8_layout(g, t);
  WeightedMajorityGraph a(L.num_candidates());
  for (std::size_t e = 0; e < L.edges; ++e) {
    a.set(L.edge(e), L.vertex(g.edges[e].first), 2);
    a.set(L.edge(e), L.vertex(g.edges[e].second), 2);
    a.set(L.g(), L.edge(e), 2);
    for (std::size_t i = 0; i < 4; ++i) a.set(L.h(i), L.edge(e), 2);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t v = 0; v < g.q; ++v) a.set(L.b(i), L.vertex(v), 2);
    for (std::size_t j = 0; j < g.q - t + 8; ++j) a.set(L.f(j), L.b(i), 2);
    for (std::size_t j = 0; j < 5; ++j) a.set(L.k(j), L.h(i), 2);
    a.set(L.h(i), L.d(), 2);
  }
  return a;
}

ReductionInstance baldwin8_from_cubic_vc(const GraphInstance& g, std::size_t t) {
  const auto L = baldwin8_layout(g, t);
  Profile p = sum_bilevel_realize(baldwin8_parts(g, t));
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.q; ++v) names.push_back("v" + std::to_string(v + 1));
  for (std::size_t e = 0; e < L.edges; ++e) names.push_back("e" + std::to_string(e + 1));
  names.push_back("d");
  for (std::size_t i = 0; i < 4; ++i) names.push_back("b" + std::to_string(i + 1));
  for (std::size_t i = 0; i < g.q - t + 8; ++i) names.push_back("f" + std::to_string(i + 1));
  names.push_back("g1");
  for (std::size_t i = 0; i < 4; ++i) names.push_back("h" + std::to_string(i + 1));
  for (std::size_t i = 0; i < 5; ++i) names.push_back("k" + std::to_string(i + 1));
  p.set_names(std::move(names));
  return winner_instance(std::move(p), RuleId::baldwin(), L.d());
}

std::vector<Candidate> baldwin8_cover_order(const GraphInstance& g, std::size_t t,
                                            const std::vector<std::size_t>& cover) {
  const auto L = baldwin8_layout(g, t);
  std::vector<bool> in(g.q, false);
  for (const std::size_t v : cover) {
    if (v >= g.q || in[v]) throw DomainError("bad cover vertex");
    in[v] = true;
  }
  if (cover.size() != t) throw DomainError("cover must have exactly t vertices");
  std::vector<Candidate> order;
  for (const std::size_t v : cover) order.push_back(L.vertex(v));
  for (std::size_t i = 0; i < 4; ++i) order.push_back(L.b(i));
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t e = 0; e < L.edges; ++e) {
      const bool both = in[g.edges[e].first] && in[g.edges[e].second];
      if (both == (pass == 0)) order.push_back(L.edge(e));
    }
  }
  for (std::size_t i = 0; i < 4; ++i) order.push_back(L.h(i));
  for (std::size_t i = 0; i < g.q; ++i) {
    if (!in[i]) order.push_back(L.vertex(i));
  }
  for (std::size_t i = 0; i < g.q - t + 8; ++i) order.push_back(L.f(i));
  order.push_back(L.g());
  for (std::size_t i = 0; i < 5; ++i) order.push_back(L.k(i));
  order.push_back(L.d());
  return order;
}

ReductionInstance seqwi_veto_topk_from_hitting_set(const HittingSetInstance& inst) {
  inst.validate();
  const std::size_t nu = inst.universe;
  const std::size_t mu = inst.sets.size();
  const std::size_t ell = inst.target;
  const std::size_t m = 2 + nu + mu;
  const Candidate d = 0;
  const Candidate b = 1;
  const auto c = [](std::size_t u) { return static_cast<Candidate>(2 + u); };
  const auto e = [nu](std::size_t s) { return static_cast<Candidate>(2 + nu + s); };

  Profile p(m);
  std::vector<std::uint64_t> in_sets(nu, 0);
  for (std::size_t s = 0; s < mu; ++s) {
    for (const std::size_t u : inst.sets[s]) {
      p.add(bottom(m, {b, e(s), c(u)}), 1);
      ++in_sets[u];
    }
  }
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t u2 = 0; u2 < nu; ++u2) {
      if (u2 != u) p.add(bottom(m, {b, c(u2), c(u)}), 1);
    }
  }
  for (std::size_t s = 0; s < mu; ++s) {
    if (nu + mu + ell >= 2) p.add(bottom(m, {b, e(s)}), nu + mu + ell - 1);
  }
  if (nu + mu + ell > 0) p.add(bottom(m, {d}), nu + mu + ell);
  p.add(bottom(m, {b}), nu + mu + ell + 1);
  // Pad every element candidate to a bottom count of nu + mu.
  for (std::size_t u = 0; u < nu; ++u) p.add(bottom(m, {b, c(u)}), mu - in_sets[u] + 1);

  std::vector<std::string> names{"d", "b"};
  for (std::size_t u = 0; u < nu; ++u) names.push_back("c" + std::to_string(u + 1));
  for (std::size_t s = 0; s < mu; ++s) names.push_back("S" + std::to_string(s + 1));
  p.set_names(std::move(names));
  const RuleId rule = RuleId::seq_winner(ScoringSystem::veto());
  ReductionInstance out{std::move(p), rule, {}};
  out.query = {rule, d, ell + 1, QueryMode::TopK};
  return out;
}

bool witness_replay(const Profile& p, const std::vector<Candidate>& order, const RuleId& rule) {
  if (!rule.is_sequential()) throw ConfigurationError("witness replay needs a sequential rule");
  const std::size_t m = p.num_candidates();
  std::vector<Candidate> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != m || sorted[i] != i) throw DomainError("order is not a permutation");
  }
  const ScoreEvaluator eval(p, rule.system);
  const bool winner = rule.family == RuleFamily::SeqWinner;
  CandidateMask remaining = full_mask(m);
  for (const Candidate c : order) {
    const CandidateMask legal = winner ? eval.winners(remaining) : eval.losers(remaining);
    if (!contains(legal, c)) return false;
    remaining &= ~bit(c);
  }
  return true;
}

bool sat_brute(const SatFormula& f) {
  check_brute(f.variables, "variables");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variables); ++a) {
    const bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) {
        const bool value = (a >> (std::abs(lit) - 1)) & 1U;
        return lit > 0 ? value : !value;
      });
    });
    if (ok) return true;
  }
  return false;
}

bool vc_brute(const GraphInstance& g, std::size_t t) {
  check_brute(g.q, "vertices");
  if (t > g.q) return false;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.q); ++s) {
    if (popcount(s) == t && is_vertex_cover(g, s)) return true;
  }
  return false;
}

bool clique_brute(const GraphInstance& g, std::size_t k) {
  check_brute(g.q, "vertices");
  if (k > g.q) return false;
  std::vector<std::uint64_t> adj(g.q, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.q); ++s) {
    if (popcount(s) != k) continue;
    bool ok = true;
    for (std::uint64_t rest = s; rest && ok; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      ok = (s & ~(std::uint64_t{1} << v) & ~adj[v]) == 0;
    }
    if (ok) return true;
  }
  return false;
}

bool hitting_brute(const HittingSetInstance& inst) {
  check_brute(inst.universe, "elements");
  inst.validate();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << inst.universe); ++s) {
    if (popcount(s) != inst.target) continue;
    const bool hits = std::all_of(inst.sets.begin(), inst.sets.end(), [&](const auto& set) {
      return std::any_of(set.begin(), set.end(), [&](std::size_t u) { return (s >> u) & 1U; });
    });
    if (hits) return true;
  }
  return false;
}

std::vector<GraphInstance> all_regular_graphs(std::size_t q) {
  check_brute(q, "vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < q; ++u) {
    for (std::size_t v = u + 1; v < q; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 28) throw ResourceError("regular graph enumeration limited to q <= 8");
  std::vector<GraphInstance> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    GraphInstance g{q, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((s >> i) & 1U) g.edges.push_back(pairs[i]);
    }
    if (g.regular_degree()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<GraphInstance> all_cubic_graphs(std::size_t q) {
  std::vector<GraphInstance> out;
  for (auto& g : all_regular_graphs(q)) {
    if (g.is_cubic()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SatFormula> all_occurrence_formulas(std::size_t variables) {
  if (variables > 3) throw ResourceError("formula enumeration limited to 3 variables");
  const std::size_t lits = 2 * variables;
  // Clause types: non-empty literal subsets of size <= 3.
  std::vector<std::uint32_t> types;
  for (std::uint32_t s = 1; s < (1U << lits); ++s) {
    if (std::popcount(s) <= 3) types.push_back(s);
  }
  std::vector<SatFormula> out;
  std::vector<std::size_t> seen(lits, 0);
  std::vector<std::uint32_t> chosen;
  const auto emit = [&] {
    SatFormula f{variables, {}};
    for (const std::uint32_t s : chosen) {
      std::vector<int> clause;
      for (std::size_t i = 0; i < lits; ++i) {
        if ((s >> i) & 1U) {
          const int v = static_cast<int>(i / 2) + 1;
          clause.push_back(i % 2 ? -v : v);
        }
      }
      f.clauses.push_back(std::move(clause));
    }
    out.push_back(std::move(f));
  };
  // Multisets of clause types, in non-decreasing type order.
  const auto go = [&](auto&& self, std::size_t from) -> void {
    if (std::all_of(seen.begin(), seen.end(), [](std::size_t x) { return x == 2; })) {
      emit();
      return;
    }
    for (std::size_t t = from; t < types.size(); ++t) {
      bool fits = true;
      for (std::size_t i = 0; i < lits; ++i) {
        if (((types[t] >> i) & 1U) && seen[i] == 2) fits = false;
      }
      if (!fits) continue;
      for (std::size_t i = 0; i < lits; ++i) seen[i] += (types[t] >> i) & 1U;
      chosen.push_back(types[t]);
      self(self, t);
      chosen.pop_back();
      for (std::size_t i = 0; i < lits; ++i) seen[i] -= (types[t] >> i) & 1U;
    }
  };
  go(go, 0);
  return out;
}

std::vector<HittingSetInstance> all_hitting_set_instances(std::size_t universe,
                                                          std::size_t max_sets) {
  check_brute(universe, "elements");
  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << universe); ++s) {
    std::vector<std::size_t> set;
    for (std::size_t u = 0; u < universe; ++u) {
      if ((s >> u) & 1U) set.push_back(u);
    }
    subsets.push_back(std::move(set));
  }
  std::vector<HittingSetInstance> out;
  std::vector<std::vector<std::size_t>> family;
  const auto go = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t target = 0; target <= universe; ++target) {
      out.push_back({universe, family, target});
    }
    if (family.size() == max_sets) return;
    for (std::size_t i = from; i < subsets.size(); ++i) {
      family.push_back(subsets[i]);
      self(self, i + 1);
      family.pop_back();
    }
  };
  go(go, 0);
  return out;
}

}  // namespace rankagg
