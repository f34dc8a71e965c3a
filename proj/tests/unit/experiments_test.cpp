#include <gtest/gtest.h>

#include <sstream>

#include "rankagg/errors.hpp"
#include "rankagg/experiments.hpp"
#include "test_support.hpp"

namespace rankagg {
namespace {

const char* kConfig = R"(# small run
model   = mallows
params  = 0, 0.5
m       = 6
n       = 15
samples = 40
seed    = 5
rules   = stv, seqwin:plurality
pairs   = stv vs seqwin:plurality, seqwin:plurality vs score:plurality, kemeny vs kemeny
metrics = pairwise, displacement, ties
)";

TEST(ExperimentConfig, Parses) {
  const auto c = parse_experiment_config(kConfig);
  EXPECT_EQ(c.model, SampleModel::Mallows);
  EXPECT_EQ(c.params, (std::vector<std::string>{"0", "0.5"}));
  EXPECT_EQ(c.m, std::vector<std::size_t>{6});
  EXPECT_EQ(c.samples, 40U);
  EXPECT_EQ(c.pairs.size(), 3U);
  EXPECT_EQ(c.pairs[0].first, RuleId::stv());
  EXPECT_EQ(c.metrics.size(), 3U);
  EXPECT_NO_THROW(c.validate());
}

TEST(ExperimentConfig, Errors) {
  EXPECT_THROW(parse_experiment_config("model = urn\n"), ParseError);
  EXPECT_THROW(parse_experiment_config("model = ic\nm = 3\n"), ConfigurationError);
  EXPECT_THROW(parse_experiment_config("colour = red\n"), ParseError);
  EXPECT_THROW(parse_experiment_config("pairs = stv seqwin:veto\n"), ParseError);

  auto c = parse_experiment_config(kConfig);
  c.samples = 0;
  EXPECT_THROW(c.validate(), ConfigurationError);
  c = parse_experiment_config(kConfig);
  c.m = {17};
  EXPECT_THROW(run_experiment(c), ResourceError);
  c = parse_experiment_config(kConfig);
  c.params = {"1.5"};
  EXPECT_THROW(c.validate(), ConfigurationError);
}

TEST(Experiments, RowsAndInvariants) {
  const auto c = parse_experiment_config(kConfig);
  const auto r = run_experiment(c);
  ASSERT_EQ(r.pairwise.size(), 6U);
  ASSERT_EQ(r.displacement.size(), 2U * 3 * 6);
  ASSERT_EQ(r.ties.size(), 4U);
  for (const auto& row : r.pairwise) {
    EXPECT_GE(row.mean_norm_swap, 0.0);
    EXPECT_LE(row.mean_norm_swap, 1.0);
    if (row.rule_a == row.rule_b) EXPECT_EQ(row.mean_norm_swap, 0.0);
  }
  for (const auto& row : r.displacement) {
    EXPECT_GE(row.mean_displacement, 0.0);
    EXPECT_LE(row.mean_displacement, 6.0);
    if (row.rule_a == "seqwin:plurality" && row.position == 1) EXPECT_EQ(row.mean_displacement, 0.0);
  }
  // norm-phi 0: every profile is unanimous.
  EXPECT_EQ(r.ties[0].rule, "seqlose:plurality");
  EXPECT_EQ(r.ties[0].mean_tie_rounds, 4.0);
  EXPECT_EQ(r.ties[1].mean_tie_rounds, 0.0);
  EXPECT_EQ(r.pairwise[0].point.param, "0");
}

TEST(Experiments, BitIdenticalAcrossThreadCounts) {
  auto c = parse_experiment_config(kConfig);
  const auto csv = [&](std::size_t threads) {
    c.threads = threads;
    const auto r = run_experiment(c);
    std::ostringstream out;
    write_pairwise_csv(out, r.pairwise);
    write_displacement_csv(out, r.displacement);
    write_ties_csv(out, r.ties);
    return out.str();
  };
  const std::string one = csv(1);
  EXPECT_EQ(one, csv(3));
  EXPECT_EQ(one, csv(1));
}

TEST(Experiments, CsvSchemas) {
  auto c = parse_experiment_config(kConfig);
  c.params = {"0"};
  const auto r = run_experiment(c);
  std::ostringstream pw, dp, ti;
  write_pairwise_csv(pw, r.pairwise);
  write_displacement_csv(dp, r.displacement);
  write_ties_csv(ti, r.ties);
  const auto header = [](const std::string& s) {
    std::istringstream in(s);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line[0], '#');
    std::getline(in, line);
    return line;
  };
  EXPECT_EQ(header(pw.str()), "model,param,m,n,samples,seed,rule_a,rule_b,mean_norm_swap,stddev");
  EXPECT_EQ(header(dp.str()),
            "model,param,m,n,samples,seed,rule_a,rule_b,position,mean_displacement");
  EXPECT_EQ(header(ti.str()), "model,param,m,n,samples,seed,rule,mean_tie_rounds");
  EXPECT_NE(pw.str().find("mallows,0,6,15,40,5,seqlose:plurality,seqwin:plurality,"),
            std::string::npos);
}

TEST(Experiments, OtherModelsAndWrappers) {
  auto c = parse_experiment_config(
      "model = euclidean\nparams = 1, 2\nm = 4\nn = 5, 9\nsamples = 10\nseed = 2\n"
      "pairs = kemeny vs score:borda, stv vs coombs\nmetrics = pairwise\n");
  EXPECT_EQ(run_pairwise_distance(c).size(), 8U);
  EXPECT_EQ(run_kemeny_comparison(c).size(), 4U);
  c.rules = {RuleId::baldwin()};
  EXPECT_EQ(run_tie_statistics(c).size(), 4U);
  EXPECT_EQ(run_position_displacement(c).size(), 4U * 2 * 4);

  auto ic = parse_experiment_config(
      "model = ic\nm = 5\nn = 3\nsamples = 8\nseed = 1\nrules = stv\nmetrics = ties\n");
  EXPECT_EQ(run_tie_statistics(ic).size(), 1U);
}

TEST(PairwiseSum, MatchesPlainSumOnExactValues) {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(i * 0.5);
  EXPECT_EQ(pairwise_sum(v.data(), v.size()), 249750.0);
  EXPECT_EQ(pairwise_sum(v.data(), 0), 0.0);
}

}  // namespace
}  // namespace rankagg
