#include <benchmark/benchmark.h>

#include "rankagg/determination.hpp"
#include "rankagg/kemeny.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/random.hpp"
#include "rankagg/rules.hpp"
#include "rankagg/sampling.hpp"

namespace rankagg {
namespace {

// Kemeny DP: 2^m * m table, so the range stays well below the 16-candidate cap.
void BM_KemenyDp(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Profile p = sample_mallows(MallowsParams::normalized(m, 0.5), 100, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kemeny_rankings(p, {16, 1}));
}
BENCHMARK(BM_KemenyDp)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

// Is candidate 0 a possible STV winner on an IC profile?
void BM_SubsetDpStv(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Profile p = sample_impartial_culture(m, 2 * m, 7);
  const DeterminationQuery q{RuleId::stv(), 0, 1, QueryMode::ExactPosition};
  for (auto _ : state) benchmark::DoNotOptimize(subset_dp_decide(p, q));
}
BENCHMARK(BM_SubsetDpStv)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_StvDecideSparse(benchmark::State& state) {
  const Profile p = sample_impartial_culture(12, 5, 11);
  const DeterminationQuery q{RuleId::stv(), 3, 2, QueryMode::TopK};
  for (auto _ : state) benchmark::DoNotOptimize(stv_decide(p, q));
}
BENCHMARK(BM_StvDecideSparse);

void BM_BottomList(benchmark::State& state) {
  const Profile p = sample_impartial_culture(8, 3, 13);
  const DeterminationQuery q{RuleId::coombs(), 2, 1, QueryMode::ExactPosition};
  for (auto _ : state) benchmark::DoNotOptimize(coombs_bottomlist_decide(p, q));
}
BENCHMARK(BM_BottomList);

void BM_MallowsProfile(benchmark::State& state) {
  const auto params = MallowsParams::normalized(10, 0.5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_mallows(params, 100, seed++));
}
BENCHMARK(BM_MallowsProfile);

void BM_EuclideanProfile(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_euclidean(2, 10, 100, seed++));
}
BENCHMARK(BM_EuclideanProfile);

void BM_RunRule(benchmark::State& state, RuleId rule) {
  const Profile p = sample_mallows(MallowsParams::normalized(10, 0.5), 100, 3);
  const TieBreakOrder tie = TieBreakOrder::identity(10);
  for (auto _ : state) benchmark::DoNotOptimize(run_rule(rule, p, tie));
}
BENCHMARK_CAPTURE(BM_RunRule, score_plurality, RuleId::score(ScoringSystem::plurality()));
BENCHMARK_CAPTURE(BM_RunRule, seqwin_plurality, RuleId::seq_winner(ScoringSystem::plurality()));
BENCHMARK_CAPTURE(BM_RunRule, stv, RuleId::stv());
BENCHMARK_CAPTURE(BM_RunRule, baldwin, RuleId::baldwin());

void BM_EnumerateStv(benchmark::State& state) {
  const Profile p = sample_impartial_culture(8, 5, 17);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_selected(RuleId::stv(), p));
}
BENCHMARK(BM_EnumerateStv);

void BM_MajorityGraph(benchmark::State& state) {
  const Profile p = sample_impartial_culture(20, 500, 19);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_majority_graph(p));
}
BENCHMARK(BM_MajorityGraph);

}  // namespace
}  // namespace rankagg

BENCHMARK_MAIN();
