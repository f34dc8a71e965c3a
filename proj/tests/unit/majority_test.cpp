#include <gtest/gtest.h>

#include "rankagg/errors.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/rules.hpp"
#include "rankagg/scoring.hpp"
#include "test_support.hpp"

namespace rankagg {
namespace {

using test::p0;
using test::rk;

WeightedMajorityGraph random_even_graph(std::size_t m, Rng& rng) {
  WeightedMajorityGraph g(m);
  for (Candidate c = 0; c < m; ++c) {
    for (Candidate d = c + 1; d < m; ++d) {
      g.set(c, d, 2 * (static_cast<std::int64_t>(rng.below(7)) - 3));
    }
  }
  return g;
}

BilevelGraph random_bilevel(std::size_t m, Rng& rng) {
  BilevelGraph b;
  b.m = m;
  const std::size_t blocks = 1 + rng.below(3);
  b.c_blocks.resize(blocks);
  b.d_blocks.resize(blocks);
  for (Candidate c = 0; c < m; ++c) {
    const auto slot = rng.below(2 * blocks + 1);
    if (slot == 2 * blocks) continue;  // unused candidate
    (slot % 2 ? b.d_blocks : b.c_blocks)[slot / 2].push_back(c);
  }
  return b;
}

TEST(MajorityGraph, P0) {
  const auto g = weighted_majority_graph(p0());
  EXPECT_EQ(g(0, 1), -1);
  EXPECT_EQ(g(0, 2), -1);
  EXPECT_EQ(g(1, 2), 3);
  EXPECT_EQ(g(2, 1), -3);
  EXPECT_EQ(c2_borda_scores(g), (std::vector<std::int64_t>{-2, 4, -2}));
  EXPECT_TRUE(weighted_majority_graph(p0() + reverse_profile(p0())).is_zero());
}

TEST(MajorityGraph, InvariantsOnRandomProfiles) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = test::random_profile(rng, 1, 7, 1, 9);
    const auto g = weighted_majority_graph(p);
    const auto n = static_cast<std::int64_t>(p.num_voters());
    std::int64_t total = 0;
    for (Candidate c = 0; c < p.num_candidates(); ++c) {
      EXPECT_EQ(g(c, c), 0);
      for (Candidate d = 0; d < p.num_candidates(); ++d) {
        EXPECT_EQ(g(c, d), -g(d, c));
        if (c != d) {
          EXPECT_LE(std::abs(g(c, d)), n);
          EXPECT_EQ((g(c, d) - n) % 2, 0);
        }
      }
    }
    for (const auto v : c2_borda_scores(g)) total += v;
    EXPECT_EQ(total, 0);
  }
}

TEST(McGarvey, SingleArc) {
  WeightedMajorityGraph g(3);
  g.set(0, 1, 2);
  const Profile p = mcgarvey_realize(g);
  EXPECT_EQ(p.num_voters(), 2U);
  EXPECT_EQ(weighted_majority_graph(p), g);
  EXPECT_EQ(mcgarvey_realize(WeightedMajorityGraph(4)).num_voters(), 0U);
  WeightedMajorityGraph odd(3);
  odd.set(0, 2, 1);
  EXPECT_THROW(mcgarvey_realize(odd), DomainError);
}

TEST(McGarvey, RoundTrip) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_even_graph(2 + rng.below(7), rng);
    const Profile p = mcgarvey_realize(g);
    EXPECT_EQ(weighted_majority_graph(p), g);
    std::uint64_t expected_voters = 0;
    for (Candidate c = 0; c < g.size(); ++c) {
      for (Candidate d = 0; d < g.size(); ++d) {
        if (g(c, d) > 0) expected_voters += static_cast<std::uint64_t>(g(c, d));
      }
    }
    EXPECT_EQ(p.num_voters(), expected_voters);
  }
}

TEST(Bilevel, Examples) {
  BilevelGraph b{4, {{0}, {2}}, {{1}, {3}}};
  Profile expected(4);
  expected.add(rk({0, 1, 2, 3}));
  expected.add(rk({2, 3, 0, 1}));
  const Profile p = bilevel_realize(b);
  EXPECT_TRUE(p.same_voters(expected));
  EXPECT_EQ(weighted_majority_graph(p), b.graph());
  EXPECT_EQ(b.graph()(0, 1), 2);
  EXPECT_EQ(b.graph()(0, 3), 0);

  BilevelGraph one{2, {{0}}, {{1}}};
  Profile both(2);
  both.add(rk({0, 1}), 2);
  EXPECT_TRUE(bilevel_realize(one).same_voters(both));

  BilevelGraph overlap{3, {{0, 1}}, {{1, 2}}};
  EXPECT_THROW(bilevel_realize(overlap), DomainError);
}

TEST(Bilevel, RoundTrip) {
  Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = random_bilevel(1 + rng.below(10), rng);
    const Profile p = bilevel_realize(b);
    EXPECT_EQ(p.num_voters(), 2U);
    EXPECT_EQ(weighted_majority_graph(p), b.graph());
  }
}

TEST(Bilevel, SumOfParts) {
  std::vector<BilevelGraph> parts{{6, {{0}}, {{1}}},
                                  {6, {{2}}, {{3}}},
                                  {6, {{4}}, {{5}}},
                                  {6, {{1}}, {{2, 4}}}};
  const Profile p = sum_bilevel_realize(parts);
  EXPECT_EQ(p.num_voters(), 8U);
  WeightedMajorityGraph expected(6);
  for (const auto& b : parts) {
    const auto g = b.graph();
    for (Candidate c = 0; c < 6; ++c) {
      for (Candidate d = 0; d < 6; ++d) {
        if (g(c, d) > 0) expected.set(c, d, 2);
      }
    }
  }
  EXPECT_EQ(weighted_majority_graph(p), expected);
  EXPECT_EQ(sum_bilevel_realize({}).num_voters(), 0U);
  EXPECT_THROW(sum_bilevel_realize({parts[0], parts[0]}), DomainError);
}

TEST(Padding, KeepsTheGraph) {
  const Profile base = p0();
  EXPECT_EQ(padded_opposite_pairs(base, 0), base);
  for (std::uint64_t k : {1, 3, 10}) {
    const Profile p = padded_opposite_pairs(base, k);
    EXPECT_EQ(p.num_voters(), base.num_voters() + 2 * k);
    EXPECT_EQ(weighted_majority_graph(p), weighted_majority_graph(base));
  }
}

TEST(C2Borda, AffineIdentity) {
  Rng rng(1000);
  for (int trial = 0; trial < 300; ++trial) {
    const Profile p = test::random_profile(rng, 1, 9, 1, 15);
    const auto c2 = c2_borda_scores(weighted_majority_graph(p));
    const auto borda = scores(p, ScoringSystem::borda());
    const auto n = static_cast<std::int64_t>(p.num_voters());
    const auto m = static_cast<std::int64_t>(p.num_candidates());
    for (std::size_t c = 0; c < c2.size(); ++c) {
      EXPECT_EQ(Rational(c2[c]), 2 * borda[c] - n * (m + 1));
    }
  }
}

TEST(Baldwin, OnlyTheMajorityGraphMatters) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Profile p = test::random_profile(rng, 2, 6, 1, 8);
    const auto baldwin = enumerate_selected(RuleId::baldwin(), p);
    EXPECT_EQ(enumerate_selected(RuleId::baldwin(), padded_opposite_pairs(p, 1 + rng.below(4))),
              baldwin);
    if (p.num_voters() % 2 == 0) {
      EXPECT_EQ(enumerate_selected(RuleId::baldwin(), mcgarvey_realize(weighted_majority_graph(p))),
                baldwin);
    }
  }
}

TEST(GraphFormat, ParseAndSerialize) {
  const auto g = parse_graph("# demo\n3\n0 1 2\n2 1 4\n");
  EXPECT_EQ(g(0, 1), 2);
  EXPECT_EQ(g(1, 2), -4);
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  EXPECT_THROW(parse_graph("3\n0 3 2\n"), ParseError);
  const auto b = parse_bilevel("4\n0 | 1\n2 | 3\n");
  EXPECT_EQ(b.graph(), (BilevelGraph{4, {{0}, {2}}, {{1}, {3}}}).graph());
}

}  // namespace
}  // namespace rankagg
