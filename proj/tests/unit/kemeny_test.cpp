#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "rankagg/errors.hpp"
#include "rankagg/kemeny.hpp"
#include "test_support.hpp"

namespace rankagg {
namespace {

using test::p0;
using test::rankings;
using test::rk;

// Exhaustive minimizers over all m! rankings.
KemenyResult exhaustive(const Profile& p) {
  std::vector<Candidate> order(p.num_candidates());
  std::iota(order.begin(), order.end(), Candidate{0});
  KemenyResult best;
  best.optimum = std::numeric_limits<std::uint64_t>::max();
  do {
    const Ranking r(order);
    const auto cost = kemeny_total_distance(r, p);
    if (cost < best.optimum) {
      best.optimum = cost;
      best.rankings.clear();
    }
    if (cost == best.optimum) best.rankings.push_back(r);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

TEST(Kemeny, TotalDistance) {
  EXPECT_EQ(kemeny_total_distance(rk({1, 2, 0}), p0()), 8U);
  EXPECT_EQ(kemeny_total_distance(rk({1, 0, 2}), p0()), 9U);
  EXPECT_EQ(kemeny_total_distance(Ranking::identity(5), test::unanimous(5, 4)), 0U);
}

TEST(Kemeny, DisagreementMatrix) {
  const DisagreementMatrix d(p0());
  EXPECT_EQ(d(0, 1), 4U);  // four voters put b above a
  EXPECT_EQ(d(1, 2), 2U);
  for (Candidate c = 0; c < 3; ++c) {
    EXPECT_EQ(d(c, c), 0U);
    for (Candidate e = 0; e < 3; ++e) {
      if (c != e) EXPECT_EQ(d(c, e) + d(e, c), 7U);
    }
  }
}

TEST(Kemeny, Examples) {
  const auto r = kemeny_rankings(p0());
  EXPECT_EQ(r.optimum, 8U);
  EXPECT_EQ(std::set<Ranking>(r.rankings.begin(), r.rankings.end()), rankings({{1, 2, 0}}));

  const auto u = kemeny_rankings(test::unanimous(6, 3));
  EXPECT_EQ(u.optimum, 0U);
  EXPECT_EQ(u.rankings, std::vector<Ranking>{Ranking::identity(6)});

  Profile one(4);
  one.add(rk({2, 0, 3, 1}));
  EXPECT_EQ(kemeny_rankings(one).rankings, std::vector<Ranking>{rk({2, 0, 3, 1})});
}

TEST(Kemeny, Bounds) {
  EXPECT_THROW(kemeny_rankings(test::unanimous(17, 1)), ResourceError);
  Profile empty(4);
  const auto all = kemeny_rankings(empty);
  EXPECT_EQ(all.rankings.size(), 24U);
  const auto capped = kemeny_rankings(empty, {16, 5});
  EXPECT_EQ(capped.rankings.size(), 5U);
  EXPECT_TRUE(capped.truncated);
}

TEST(Kemeny, MatchesExhaustiveSearch) {
  Rng rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = test::random_profile(rng, 1, 7, 1, 9);
    const auto dp = kemeny_rankings(p);
    const auto brute = exhaustive(p);
    EXPECT_EQ(dp.optimum, brute.optimum);
    auto sorted = dp.rankings;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, brute.rankings);
  }
}

TEST(Kemeny, TieBrokenChoiceIsLexicographicallyEarliest) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = test::random_profile(rng, 1, 6, 1, 4);
    const std::size_t m = p.num_candidates();
    const Ranking tie = uniform_ranking(m, rng);
    const auto chosen = kemeny_ranking(p, TieBreakOrder(tie));
    // Compare minimizers through their tie-order priority sequences.
    const auto key = [&](const Ranking& r) {
      std::vector<std::size_t> k;
      for (const Candidate c : r.order()) k.push_back(tie.position_of(c));
      return k;
    };
    const auto all = kemeny_rankings(p).rankings;
    const auto best = *std::min_element(all.begin(), all.end(),
                                        [&](const auto& a, const auto& b) { return key(a) < key(b); });
    EXPECT_EQ(chosen.ranking, best);
    EXPECT_EQ(chosen.optimum, kemeny_rankings(p).optimum);
  }
}

TEST(Kemeny, CondorcetWinnerIsFirst) {
  Rng rng(55);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Profile p = test::random_profile(rng, 2, 7, 1, 9);
    const auto cw = condorcet_winner(p);
    if (!cw) continue;
    ++seen;
    for (const auto& r : kemeny_rankings(p).rankings) EXPECT_EQ(r.front(), *cw);
  }
  EXPECT_GT(seen, 50);
}

TEST(Kemeny, ReversalSymmetry) {
  Rng rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = test::random_profile(rng, 1, 7, 1, 9);
    std::set<Ranking> forward;
    for (const auto& r : kemeny_rankings(p).rankings) forward.insert(reverse_ranking(r));
    const auto back = kemeny_rankings(reverse_profile(p)).rankings;
    EXPECT_EQ(forward, std::set<Ranking>(back.begin(), back.end()));
  }
}

TEST(Displacement, WorkedValues) {
  const Ranking a = rk({0, 1, 2, 3});
  const Ranking b = rk({3, 2, 0, 1});
  EXPECT_EQ(position_displacement(a, b, 1), Rational(5, 2));
  EXPECT_EQ(position_displacement(a, b, 2), Rational(3, 2));
  for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(position_displacement(a, a, i), Rational(0));
  EXPECT_THROW(position_displacement(a, b, 0), DomainError);
  EXPECT_THROW(position_displacement(a, b, 5), DomainError);
}

}  // namespace
}  // namespace rankagg
