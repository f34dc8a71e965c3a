#include "rankagg/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "rankagg/errors.hpp"
#include "rankagg/random.hpp"
#include "rankagg/sampling.hpp"

namespace rankagg {
namespace {

using RankingSet = std::set<Ranking>;

std::string show(const RankingSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& r : s) {
    out << (first ? "" : ", ") << '(' << r.to_string() << ')';
    first = false;
  }
  out << '}';
  return out.str();
}

std::string show(CandidateMask s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (; s; s &= s - 1) {
    out << (first ? "" : ", ") << std::countr_zero(s);
    first = false;
  }
  out << '}';
  return out.str();
}

CandidateMask at_position(const RankingSet& s, bool top) {
  CandidateMask out = 0;
  for (const auto& r : s) out |= bit(top ? r.front() : r.back());
  return out;
}

// Rankings of `outputs` with a at the top (or bottom), a removed and the
// rest renumbered as restrict_profile does.
RankingSet strip(const RankingSet& outputs, Candidate a, bool top, std::size_t m) {
  const CandidateMask keep = full_mask(m) & ~bit(a);
  RankingSet out;
  for (const auto& r : outputs) {
    if ((top ? r.front() : r.back()) == a) out.insert(restrict_ranking(r, keep));
  }
  return out;
}

AxiomCheck fail(std::string details) { return {false, std::move(details)}; }

AxiomCheck independence(const RuleId& rule, const Profile& p, bool top,
                        const EnumerationOptions& options) {
  const std::size_t m = p.num_candidates();
  if (m < 2) return {};
  const RankingSet f = enumerate_selected(rule, p, options);
  for (CandidateMask ends = at_position(f, top); ends; ends &= ends - 1) {
    const auto a = static_cast<Candidate>(std::countr_zero(ends));
    const Restriction r = restrict_profile(p, full_mask(m) & ~bit(a));
    const RankingSet reduced = enumerate_selected(rule, r.profile, options);
    const RankingSet expected = strip(f, a, top, m);
    if (reduced != expected) {
      return fail("removing " + std::to_string(a) + " gives " + show(reduced) + ", expected " +
                  show(expected));
    }
  }
  return {};
}

AxiomCheck reinforcement(const RuleId& rule, const AxiomWitness& w, int where,
                         const EnumerationOptions& options) {
  if (!w.second) throw DomainError("reinforcement needs two profiles");
  const Profile& p = w.first;
  const Profile& q = *w.second;
  if (p.num_candidates() != q.num_candidates()) {
    throw DimensionError("reinforcement profiles differ in candidate count");
  }
  const RankingSet fp = enumerate_selected(rule, p, options);
  const RankingSet fq = enumerate_selected(rule, q, options);
  const RankingSet fpq = enumerate_selected(rule, p + q, options);
  if (where == 0) {
    RankingSet both;
    std::set_intersection(fp.begin(), fp.end(), fq.begin(), fq.end(),
                          std::inserter(both, both.end()));
    if (both.empty() || fpq == both) return {};
    return fail("f(P+P') = " + show(fpq) + ", f(P) n f(P') = " + show(both));
  }
  const bool top = where > 0;
  const CandidateMask both = at_position(fp, top) & at_position(fq, top);
  const CandidateMask joint = at_position(fpq, top);
  if (both == 0 || joint == both) return {};
  return fail(std::string(top ? "first" : "last") + " candidates of f(P+P') are " + show(joint) +
              ", intersection is " + show(both));
}

}  // namespace

AxiomId parse_axiom(std::string_view name) {
  for (const AxiomId a : all_axioms()) {
    if (axiom_name(a) == name) return a;
  }
  throw ConfigurationError("unknown axiom '" + std::string(name) + "'");
}

std::string axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::IndependenceTop:
      return "independence-top";
    case AxiomId::IndependenceBottom:
      return "independence-bottom";
    case AxiomId::Reinforcement:
      return "reinforcement";
    case AxiomId::ReinforcementTop:
      return "reinforcement-top";
    case AxiomId::ReinforcementBottom:
      return "reinforcement-bottom";
    case AxiomId::CondorcetWinnerTop:
      return "condorcet-top";
    case AxiomId::CopyMajority:
      return "copy-majority";
    case AxiomId::IndependenceClonesTop:
      return "clones-top";
  }
  return "?";
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> all{
      AxiomId::IndependenceTop,    AxiomId::IndependenceBottom,  AxiomId::Reinforcement,
      AxiomId::ReinforcementTop,   AxiomId::ReinforcementBottom, AxiomId::CondorcetWinnerTop,
      AxiomId::CopyMajority,       AxiomId::IndependenceClonesTop};
  return all;
}

AxiomCheck check_axiom_instance(AxiomId axiom, const RuleId& rule, const AxiomWitness& w,
                                const EnumerationOptions& options) {
  const Profile& p = w.first;
  switch (axiom) {
    case AxiomId::IndependenceTop:
      return independence(rule, p, true, options);
    case AxiomId::IndependenceBottom:
      return independence(rule, p, false, options);
    case AxiomId::Reinforcement:
      return reinforcement(rule, w, 0, options);
    case AxiomId::ReinforcementTop:
      return reinforcement(rule, w, 1, options);
    case AxiomId::ReinforcementBottom:
      return reinforcement(rule, w, -1, options);
    case AxiomId::CondorcetWinnerTop: {
      const auto cw = condorcet_winner(p);
      if (!cw) return {};
      const CandidateMask tops = at_position(enumerate_selected(rule, p, options), true);
      if (tops == bit(*cw)) return {};
      return fail("Condorcet winner " + std::to_string(*cw) + ", first candidates " + show(tops));
    }
    case AxiomId::CopyMajority: {
      const auto maj = majority_ranking(p);
      if (!maj) return {};
      const RankingSet f = enumerate_selected(rule, p, options);
      if (f == RankingSet{*maj}) return {};
      return fail("majority ranking (" + maj->to_string() + "), output " + show(f));
    }
    case AxiomId::IndependenceClonesTop: {
      const std::size_t m = p.num_candidates();
      CandidateMask clones = 0;
      for (const Candidate c : w.clones) {
        if (c >= m) throw DomainError("clone " + std::to_string(c) + " out of range");
        clones |= bit(c);
      }
      const std::size_t size = popcount(clones);
      if (size == 0) throw DomainError("empty clone set");
      for (const auto& g : p.groups()) {
        std::size_t lo = m;
        std::size_t hi = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (contains(clones, g.ranking.at(i))) {
            lo = std::min(lo, i);
            hi = i;
          }
        }
        if (hi - lo + 1 != size) throw DomainError("clone set is not consecutive in every vote");
      }
      const auto rep = static_cast<Candidate>(std::countr_zero(clones));
      const CandidateMask keep = (full_mask(m) & ~clones) | bit(rep);
      const Restriction r = restrict_profile(p, keep);
      const RankingSet merged = enumerate_selected(rule, r.profile, options);
      RankingSet collapsed;
      for (const auto& out : enumerate_selected(rule, p, options)) {
        std::vector<Candidate> seq;
        bool placed = false;
        for (const Candidate c : out.order()) {
          if (!contains(clones, c)) {
            seq.push_back(static_cast<Candidate>(r.old_to_new[c]));
          } else if (!placed) {
            seq.push_back(static_cast<Candidate>(r.old_to_new[rep]));
            placed = true;
          }
        }
        collapsed.emplace(std::move(seq));
      }
      if (collapsed == merged) return {};
      return fail("collapsed f(P) = " + show(collapsed) + ", f(P') = " + show(merged));
    }
  }
  throw ConfigurationError("unknown axiom");
}

namespace {

AxiomWitness sample_witness(AxiomId axiom, const SearchOptions& o, Rng& rng) {
  const std::size_t lo = axiom == AxiomId::IndependenceClonesTop ? 3 : 2;
  const std::size_t m_max = std::max(o.m_max, lo);
  const auto draw_m = [&] { return lo + static_cast<std::size_t>(rng.below(m_max - lo + 1)); };
  const auto draw_n = [&] { return 1 + static_cast<std::size_t>(rng.below(std::max<std::size_t>(o.n_max, 1))); };
  const auto ic = [&](std::size_t m, std::size_t n) {
    Profile p(m);
    for (std::size_t i = 0; i < n; ++i) p.add(uniform_ranking(m, rng));
    return p;
  };
  AxiomWitness w;
  switch (axiom) {
    case AxiomId::Reinforcement:
    case AxiomId::ReinforcementTop:
    case AxiomId::ReinforcementBottom: {
      const std::size_t m = draw_m();
      w.first = ic(m, draw_n());
      w.second = ic(m, draw_n());
      break;
    }
    case AxiomId::CopyMajority: {
      const std::size_t m = draw_m();
      const std::size_t n = draw_n();
      const std::size_t copies = n / 2 + 1;
      w.first = ic(m, n - copies);
      w.first.add(uniform_ranking(m, rng), copies);
      break;
    }
    case AxiomId::IndependenceClonesTop: {
      // Sample on m-1 candidates and give candidate x a twin m-1, placed
      // directly above or below x in each vote.
      const std::size_t m = draw_m();
      const Profile base = ic(m - 1, draw_n());
      const auto x = static_cast<Candidate>(rng.below(m - 1));
      const auto twin = static_cast<Candidate>(m - 1);
      w.first = Profile(m);
      for (const auto& g : base.groups()) {
        std::vector<Candidate> order(g.ranking.order().begin(), g.ranking.order().end());
        const auto at = std::find(order.begin(), order.end(), x) - order.begin();
        order.insert(order.begin() + at + static_cast<std::ptrdiff_t>(rng.below(2)), twin);
        w.first.add(Ranking(std::move(order)), g.count);
      }
      w.clones = {x, twin};
      break;
    }
    default:
      w.first = ic(draw_m(), draw_n());
      break;
  }
  return w;
}

}  // namespace

std::optional<Counterexample> search_counterexample(AxiomId axiom, const RuleId& rule,
                                                    const SearchOptions& options) {
  if (options.budget == 0) throw DomainError("search budget must be at least 1");
  const std::size_t shards = std::max<std::size_t>(options.shards, 1);
  std::vector<std::optional<Counterexample>> found(shards);
  std::atomic<std::size_t> best{shards};  // lowest shard with a hit so far

  const auto run_shard = [&](std::size_t s) {
    Rng rng(derive_seed(options.seed, s));
    const std::uint64_t quota = options.budget / shards + (s < options.budget % shards ? 1 : 0);
    for (std::uint64_t i = 0; i < quota; ++i) {
      if (best.load() < s) return;  // a lower shard already decided the result
      AxiomWitness w = sample_witness(axiom, options, rng);
      AxiomCheck check = check_axiom_instance(axiom, rule, w);
      if (!check.holds) {
        found[s] = Counterexample{std::move(w), std::move(check.details), s, i};
        std::size_t cur = best.load();
        while (s < cur && !best.compare_exchange_weak(cur, s)) {
        }
        return;
      }
    }
  };

  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, shards);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t s = next++; s < shards; s = next++) run_shard(s);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& f : found) {
    if (f) return std::move(f);
  }
  return std::nullopt;
}

}  // namespace rankagg
