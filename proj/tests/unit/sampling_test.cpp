#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "rankagg/errors.hpp"
#include "rankagg/sampling.hpp"
#include "test_support.hpp"

namespace rankagg {
namespace {

double mean_distance_to(const Profile& p, const Ranking& central) {
  double total = 0;
  for (const auto& g : p.groups()) {
    total += static_cast<double>(g.count) * to_double(normalized_swap_distance(g.ranking, central));
  }
  return total / static_cast<double>(p.num_voters());
}

TEST(Rng, DeterministicStreams) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(7), 7U);
    const double u = c.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_seed(5, 0), derive_seed(5, 1));
  EXPECT_NE(derive_seed(5, 0, 1), derive_seed(5, 1, 0));
}

TEST(ExpectedKendall, Values) {
  EXPECT_DOUBLE_EQ(expected_kendall(7, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(expected_kendall(7, 1.0), 7.0 * 6.0 / 4.0);
  EXPECT_NEAR(expected_kendall(3, 0.5), 19.0 / 21.0, 1e-12);
  EXPECT_THROW(expected_kendall(3, 1.5), DomainError);
  EXPECT_THROW(expected_kendall(3, -0.1), DomainError);
}

TEST(PhiFromNorm, EndpointsAndInverse) {
  EXPECT_EQ(phi_from_norm(10, 0.0), 0.0);
  EXPECT_EQ(phi_from_norm(10, 1.0), 1.0);
  const double phi = phi_from_norm(10, 0.5);
  EXPECT_NEAR(expected_kendall(10, phi), 11.25, 1e-10);
  double last = 0;
  for (int i = 0; i <= 20; ++i) {
    const double v = phi_from_norm(8, i / 20.0);
    EXPECT_GE(v, last);
    last = v;
  }
}

TEST(Mallows, ZeroDispersionCopiesTheCentre) {
  const auto params = MallowsParams::normalized(make_ranking({3, 1, 0, 2}), 0.0);
  const Profile p = sample_mallows(params, 25, 9);
  ASSERT_EQ(p.groups().size(), 1U);
  EXPECT_EQ(p.groups()[0].ranking, make_ranking({3, 1, 0, 2}));
  EXPECT_EQ(p.num_voters(), 25U);
}

TEST(Mallows, MeanDistanceMatchesNormalization) {
  for (const double norm : {0.25, 0.5, 0.8, 1.0}) {
    const auto params = MallowsParams::normalized(10, norm);
    const Profile p = sample_mallows(params, 20000, 1234);
    EXPECT_NEAR(mean_distance_to(p, params.central), norm / 2.0, 0.01) << norm;
  }
}

TEST(Mallows, DensityOnFourCandidates) {
  const std::size_t m = 4;
  const auto params = MallowsParams::normalized(m, 0.6);
  std::map<Ranking, double> weight;
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), Candidate{0});
  double z = 0;
  do {
    const Ranking r(order);
    weight[r] = std::pow(params.phi, static_cast<double>(swap_distance(r, params.central)));
    z += weight[r];
  } while (std::next_permutation(order.begin(), order.end()));

  const std::size_t samples = 100000;
  const Profile p = sample_mallows(params, samples, 77);
  std::map<Ranking, double> freq;
  for (const auto& g : p.groups()) freq[g.ranking] += static_cast<double>(g.count) / samples;
  double tv = 0;
  for (const auto& [r, w] : weight) tv += std::abs(w / z - freq[r]);
  EXPECT_LT(tv / 2, 0.02);
}

TEST(Mallows, SameSeedSameProfile) {
  const auto params = MallowsParams::normalized(6, 0.4);
  EXPECT_EQ(sample_mallows(params, 30, 5), sample_mallows(params, 30, 5));
}

TEST(Euclidean, InjectedPoints) {
  const std::vector<std::vector<double>> cands{{0.1}, {0.5}, {0.9}, {0.35}};
  const std::vector<std::vector<double>> voters{{0.0}, {0.6}, {1.0}};
  const Profile p = euclidean_profile(cands, voters);
  Profile expected(4);
  expected.add(make_ranking({0, 3, 1, 2}));
  expected.add(make_ranking({1, 3, 2, 0}));
  expected.add(make_ranking({2, 1, 3, 0}));
  EXPECT_TRUE(p.same_voters(expected));
  // Equal distances fall back to the candidate index.
  const Profile tie = euclidean_profile({{0.4}, {0.6}}, {{0.5}});
  EXPECT_EQ(tie.groups()[0].ranking, make_ranking({0, 1}));
}

TEST(Euclidean, BasicShapeAndDeterminism) {
  const Profile one = sample_euclidean(2, 1, 5, 3);
  EXPECT_EQ(one.num_voters(), 5U);
  EXPECT_EQ(one.groups()[0].ranking, Ranking::identity(1));
  EXPECT_EQ(sample_euclidean(3, 6, 40, 8), sample_euclidean(3, 6, 40, 8));
  EXPECT_THROW(sample_euclidean(0, 3, 5, 1), DomainError);
}

TEST(Euclidean, FirstPlacesAreRoughlyUniform) {
  std::vector<double> first(4, 0);
  const int profiles = 4000;
  for (int i = 0; i < profiles; ++i) {
    const Profile p = sample_euclidean(2, 4, 1, derive_seed(99, i));
    first[p.groups()[0].ranking.front()] += 1.0 / profiles;
  }
  for (const double f : first) EXPECT_NEAR(f, 0.25, 0.03);
}

TEST(ImpartialCulture, PairDistance) {
  // Two-voter profiles: canonical() reorders groups, but the distance is symmetric.
  double total = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const Profile p = sample_impartial_culture(8, 2, 31 + static_cast<std::uint64_t>(t));
    if (p.groups().size() == 1) continue;
    total += to_double(normalized_swap_distance(p.groups()[0].ranking, p.groups()[1].ranking));
  }
  EXPECT_NEAR(total / trials, 0.5, 0.02);
  EXPECT_EQ(sample_impartial_culture(1, 3, 0).groups()[0].ranking, Ranking::identity(1));
  EXPECT_EQ(sample_impartial_culture(5, 9, 2), sample_impartial_culture(5, 9, 2));
}

}  // namespace
}  // namespace rankagg
