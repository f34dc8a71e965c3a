#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "rankagg/determination.hpp"
#include "rankagg/kemeny.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/reductions.hpp"
#include "test_support.hpp"

namespace rankagg {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rankagg-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    p0_ = test::data_path("p0.prof").string();
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    write_text_file(path, text);
    return path.string();
  }

  fs::path dir_;
  std::string p0_;
};

TEST_F(Cli, AggregateWorkedExample) {
  const Outcome r = run({"aggregate", "--rule", "seqwin:plurality", "--tiebreak", "0,1,2", p0_});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0 1 2\n");
  EXPECT_EQ(r.err, "tiebreak: 0 1 2\n");
}

TEST_F(Cli, AggregateEchoesSampledTieOrder) {
  const Outcome r = run({"aggregate", "--rule", "stv", "--tiebreak-seed", "4", p0_});
  EXPECT_EQ(r.status, 0);
  Rng rng(4);
  const Ranking tie = uniform_ranking(3, rng);
  EXPECT_EQ(r.err, "tiebreak: " + tie.to_string() + "\n");
  EXPECT_EQ(r.out, aggregate(RuleId::stv(), test::p0(), TieBreakOrder(tie)).to_string() + "\n");
}

TEST_F(Cli, DetermineWorkedExample) {
  const Outcome yes = run({"determine", "--rule", "stv", "--candidate", "1", "--position", "1", p0_});
  EXPECT_EQ(yes.status, 0);
  std::istringstream lines(yes.out);
  std::string answer, witness;
  std::getline(lines, answer);
  std::getline(lines, witness);
  EXPECT_EQ(answer, "YES");
  std::vector<Candidate> order;
  std::istringstream ws(witness);
  for (Candidate c; ws >> c;) order.push_back(c);
  EXPECT_TRUE(witness_replay(test::p0(), order, RuleId::stv()));
  EXPECT_EQ(order.back(), 1U);

  const Outcome no = run({"determine", "--rule", "stv", "--candidate", "0", "--position", "1", p0_});
  EXPECT_EQ(no.out, "NO\n");
  const Outcome topk = run({"determine", "--rule", "stv", "--candidate", "0", "--position", "2",
                        "--mode", "topk", "--algo", "brute", p0_});
  EXPECT_EQ(topk.out.substr(0, 4), "YES\n");
}

TEST_F(Cli, SampleNeedsSeed) {
  EXPECT_EQ(run({"sample", "--model", "ic", "--m", "3", "--n", "4"}).status, 2);
  const Outcome r = run({"--seed", "7", "sample", "--model", "ic", "--m", "3", "--n", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse_profile(r.out), sample_impartial_culture(3, 4, 7).canonical());
  const Outcome after = run({"sample", "--model", "mallows", "--norm-phi", "0.3", "--m", "5", "--n",
                         "6", "--seed", "2", "-o", (dir_ / "s.prof").string()});
  EXPECT_EQ(after.status, 0);
  EXPECT_EQ(read_profile(dir_ / "s.prof"),
            sample_mallows(MallowsParams::normalized(5, 0.3), 6, 2).canonical());
  EXPECT_EQ(run({"sample", "--model", "mallows", "--m", "5", "--n", "6", "--seed", "2"}).status, 2);
}

TEST_F(Cli, UsageAndDomainErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"aggregate", "--rule", "nonsense", p0_}).status, 2);
  EXPECT_EQ(run({"aggregate", "--rule", "stv", "--tiebreak", "0,x", p0_}).status, 2);
  const Outcome bad_tie = run({"aggregate", "--rule", "stv", "--tiebreak", "0,1", p0_});
  EXPECT_EQ(bad_tie.status, 1);
  const Outcome missing = run({"kemeny", (dir_ / "nope.prof").string()});
  EXPECT_EQ(missing.status, 1);
  EXPECT_EQ(std::count(missing.err.begin(), missing.err.end(), '\n'), 1);
  const Outcome coombs = run({"determine", "--rule", "coombs", "--candidate", "0", "--position", "1",
                          "--algo", "bottomlist", p0_});
  EXPECT_EQ(coombs.status, 1);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST_F(Cli, EnumerateAndKemeny) {
  EXPECT_EQ(run({"enumerate", "--rule", "stv", p0_}).out, "1 0 2\n2 0 1\n");
  EXPECT_EQ(run({"--limit", "1", "enumerate", "--rule", "score:plurality", p0_}).out, "0 1 2\n");
  EXPECT_EQ(run({"kemeny", p0_}).out, "optimum 8\n1 2 0\n");
  const std::string empty = file("empty.prof", "3 0\n");
  const Outcome capped = run({"kemeny", "--limit", "2", empty});
  EXPECT_EQ(capped.out, "optimum 0\n0 1 2\n0 2 1\n");
}

TEST_F(Cli, RealizeRoundTrips) {
  const std::string graph = file("g.txt", "4\n0 1 2\n2 3 4\n1 3 2\n");
  const Outcome r = run({"realize", "--mode", "mcgarvey", graph});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(weighted_majority_graph(parse_profile(r.out)), parse_graph(read_text_file(graph)));
  const std::string bilevel = file("b.txt", "4\n0 | 1\n2 | 3\n");
  const Outcome b = run({"realize", "--mode", "bilevel", bilevel});
  EXPECT_EQ(parse_profile(b.out).num_voters(), 2U);
  EXPECT_EQ(run({"realize", "--mode", "mcgarvey", file("odd.txt", "3\n0 1 1\n")}).status, 1);
}

TEST_F(Cli, ReduceMatchesLibrary) {
  const std::string hs = file("hs.txt", "U 3\nt 1\n1 2\n2 3\n");
  const Outcome r = run({"reduce", "--type", "seqwiveto-hs", "--input", hs});
  ASSERT_EQ(r.status, 0);
  const auto inst = seqwi_veto_topk_from_hitting_set(parse_hitting_set(read_text_file(hs)));
  EXPECT_EQ(parse_profile(r.out), inst.profile.canonical());
  EXPECT_NE(r.err.find("top 2"), std::string::npos);

  const std::string k4 = file("k4.txt", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\nt 3\n");
  const Outcome b = run({"reduce", "--type", "baldwin-vc", "--input", k4});
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(parse_profile(b.out).num_voters(), 8U);
  const std::string cnf = file("f.cnf", "p cnf 1 4\n1 0\n1 0\n-1 0\n-1 0\n");
  EXPECT_EQ(run({"reduce", "--type", "stv-sat", "--input", cnf}).status, 0);
  EXPECT_EQ(run({"reduce", "--type", "stv-vc", "--input", hs}).status, 1);
}

TEST_F(Cli, Axioms) {
  const Outcome check = run({"axioms", "--axiom", "condorcet-top", "--rule", "kemeny", "--check", p0_});
  EXPECT_EQ(check.status, 0);
  EXPECT_EQ(check.out, "HOLDS\n");
  const Outcome pair = run({"axioms", "--axiom", "reinforcement", "--rule", "baldwin", "--check", p0_, p0_});
  EXPECT_EQ(pair.out, "HOLDS\n");
  EXPECT_EQ(run({"axioms", "--axiom", "condorcet-top", "--rule", "stv", "--search"}).status, 2);
  const Outcome found = run({"axioms", "--axiom", "condorcet-top", "--rule", "stv", "--search",
                         "--budget", "100000", "--seed", "1"});
  EXPECT_EQ(found.status, 0);
  EXPECT_EQ(found.out.substr(0, 9), "VIOLATED ");
  EXPECT_EQ(run({"axioms", "--axiom", "liberalism", "--rule", "stv", "--check", p0_}).status, 2);
}

TEST_F(Cli, Experiment) {
  const std::string cfg = file("e.cfg",
                               "model = mallows\nparams = 0.2\nm = 5\nn = 11\nsamples = 12\n"
                               "seed = 3\nrules = stv\npairs = stv vs kemeny\n"
                               "metrics = pairwise, ties\n");
  const Outcome r = run({"experiment", "--config", cfg, "-o", (dir_ / "out").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "out" / "pairwise.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "ties.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "out" / "displacement.csv"));
  const std::string first = read_text_file(dir_ / "out" / "pairwise.csv");
  run({"--threads", "3", "experiment", "--config", cfg, "-o", (dir_ / "again").string()});
  EXPECT_EQ(read_text_file(dir_ / "again" / "pairwise.csv"), first);
  EXPECT_EQ(run({"experiment", "--config", cfg}).status, 2);
}

}  // namespace
}  // namespace rankagg
