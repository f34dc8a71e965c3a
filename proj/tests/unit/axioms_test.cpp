#include <gtest/gtest.h>

#include "rankagg/axioms.hpp"
#include "rankagg/errors.hpp"
#include "test_support.hpp"

namespace rankagg {
namespace {

using test::p0;
using test::rk;

AxiomWitness one(Profile p) { return {std::move(p), std::nullopt, {}}; }

TEST(Axioms, Names) {
  for (const AxiomId a : all_axioms()) EXPECT_EQ(parse_axiom(axiom_name(a)), a);
  EXPECT_THROW(parse_axiom("pareto"), ConfigurationError);
}

TEST(Axioms, ReinforcementOnDoubledProfile) {
  const AxiomCheck c = check_axiom_instance(AxiomId::Reinforcement, RuleId::baldwin(),
                                            {p0(), p0(), {}});
  EXPECT_TRUE(c.holds) << c.details;
  EXPECT_EQ(enumerate_selected(RuleId::baldwin(), p0() + p0()),
            enumerate_selected(RuleId::baldwin(), p0()));
  EXPECT_THROW(check_axiom_instance(AxiomId::Reinforcement, RuleId::baldwin(), one(p0())),
               DomainError);
}

TEST(Axioms, CondorcetWinnerForKemeny) {
  ASSERT_EQ(condorcet_winner(p0()), Candidate{1});
  EXPECT_TRUE(check_axiom_instance(AxiomId::CondorcetWinnerTop, RuleId::kemeny(), one(p0())).holds);
}

TEST(Axioms, CopyMajorityForCoombs) {
  Profile p(3);
  p.add(rk({0, 1, 2}), 3);
  p.add(rk({2, 1, 0}));
  p.add(rk({1, 2, 0}));
  EXPECT_TRUE(check_axiom_instance(AxiomId::CopyMajority, RuleId::coombs(), one(p)).holds);
  EXPECT_EQ(enumerate_selected(RuleId::coombs(), p), test::rankings({{0, 1, 2}}));
}

TEST(Axioms, StvViolatesCondorcet) {
  // b beats a and c pairwise but has the fewest first places.
  Profile p(3);
  p.add(rk({0, 1, 2}), 3);
  p.add(rk({2, 1, 0}), 3);
  p.add(rk({1, 0, 2}), 1);
  p.add(rk({1, 2, 0}), 1);
  ASSERT_EQ(condorcet_winner(p), Candidate{1});
  const AxiomCheck c = check_axiom_instance(AxiomId::CondorcetWinnerTop, RuleId::stv(), one(p));
  EXPECT_FALSE(c.holds);
  EXPECT_FALSE(c.details.empty());
}

TEST(Axioms, ClonesMustBeConsecutive) {
  AxiomWitness w{p0(), std::nullopt, {0, 2}};
  EXPECT_THROW(check_axiom_instance(AxiomId::IndependenceClonesTop, RuleId::stv(), w), DomainError);
  w.clones = {1, 2};  // b and c are adjacent in every vote of P0
  EXPECT_TRUE(check_axiom_instance(AxiomId::IndependenceClonesTop, RuleId::stv(), w).holds);
}

TEST(Axioms, IndependenceAtTheTopForSeqWinner) {
  SearchOptions o;
  o.budget = 1500;
  o.seed = 3;
  for (const auto& s : {ScoringSystem::plurality(), ScoringSystem::veto(), ScoringSystem::borda()}) {
    EXPECT_FALSE(search_counterexample(AxiomId::IndependenceTop, RuleId::seq_winner(s), o));
  }
}

TEST(Axioms, SearchFindsAndReverifies) {
  SearchOptions o;
  o.budget = 100000;
  o.seed = 1;
  o.m_max = 4;
  const auto found = search_counterexample(AxiomId::CondorcetWinnerTop, RuleId::stv(), o);
  ASSERT_TRUE(found);
  EXPECT_FALSE(check_axiom_instance(AxiomId::CondorcetWinnerTop, RuleId::stv(), found->witness).holds);
}

TEST(Axioms, SearchIsIndependentOfThreadCount) {
  SearchOptions o;
  o.budget = 20000;
  o.seed = 9;
  o.shards = 6;
  o.threads = 1;
  const auto a = search_counterexample(AxiomId::CopyMajority, RuleId::baldwin(), o);
  o.threads = 4;
  const auto b = search_counterexample(AxiomId::CopyMajority, RuleId::baldwin(), o);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->shard, b->shard);
  EXPECT_EQ(a->index, b->index);
  EXPECT_EQ(a->witness.first, b->witness.first);
}

// A Condorcet cycle plus two copies of 0 1 2. Veto leaves 0 and 1 tied at
// the top of 0 1 2, so 0 1 2 survives in P+P' without being selected on P.
// Checked against the Python oracle as well.
TEST(Reinforcement, SequentialRulesOnlyKeepTheIntersection) {
  Profile cycle(3);
  cycle.add(rk({0, 2, 1}));
  cycle.add(rk({1, 0, 2}));
  cycle.add(rk({2, 1, 0}));
  Profile copies(3);
  copies.add(rk({0, 1, 2}), 2);
  const auto veto = RuleId::seq_winner(ScoringSystem::veto());
  EXPECT_EQ(enumerate_selected(veto, cycle), test::rankings({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}));
  EXPECT_EQ(enumerate_selected(veto, copies), test::rankings({{0, 1, 2}, {1, 0, 2}}));
  EXPECT_EQ(enumerate_selected(veto, cycle + copies), test::rankings({{0, 1, 2}, {1, 0, 2}}));
  EXPECT_FALSE(check_axiom_instance(AxiomId::Reinforcement, veto, {cycle, copies, {}}).holds);
}

// What does survive: a ranking chosen on both parts wins every round of the
// sum, so f(P) n f(P') is always contained in f(P+P').
TEST(Reinforcement, IntersectionIsAlwaysSelected) {
  Rng rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng.below(5);
    const Profile a = sample_impartial_culture(m, 1 + rng.below(7), rng.next());
    const Profile b = sample_impartial_culture(m, 1 + rng.below(7), rng.next());
    for (const auto& s : {ScoringSystem::plurality(), ScoringSystem::veto(), ScoringSystem::borda()}) {
      for (const auto& rule : {RuleId::seq_winner(s), RuleId::seq_loser(s)}) {
        const auto fa = enumerate_selected(rule, a);
        const auto fb = enumerate_selected(rule, b);
        const auto sum = enumerate_selected(rule, a + b);
        for (const auto& r : fa) {
          if (fb.count(r)) EXPECT_TRUE(sum.count(r)) << rule.name() << " " << r.to_string();
        }
      }
    }
  }
}

}  // namespace
}  // namespace rankagg
