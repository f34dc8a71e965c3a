#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankagg/rules.hpp"

namespace rankagg {

enum class SampleModel { Mallows, Euclidean, ImpartialCulture };

enum class Metric { Pairwise, Displacement, Ties };

// Parsed from a key = value file ('#' starts a comment, lists are comma
// separated):
//
//   model   = mallows              # mallows | euclidean | ic
//   params  = 0, 0.5, 1            # normalized phi, or dimension for euclidean
//   m       = 10                   # one value or a list
//   n       = 100                  # one value or a list
//   samples = 2000
//   seed    = 7
//   rules   = stv, seqwin:plurality
//   pairs   = stv vs seqwin:plurality, kemeny vs seqwin:plurality
//   metrics = pairwise, displacement, ties
//   threads = 4                    # optional, 0 = hardware concurrency
//   output  = results              # optional, directory for the CSVs
//
// The grid is params x m x n. Tie statistics cover `rules`; the distance
// and displacement metrics cover `pairs`. The ic model takes no params.
struct ExperimentConfig {
  SampleModel model = SampleModel::Mallows;
  std::vector<std::string> params;  // kept verbatim for the CSV
  std::vector<std::size_t> m;
  std::vector<std::size_t> n;
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  std::vector<RuleId> rules;
  std::vector<std::pair<RuleId, RuleId>> pairs;
  std::vector<Metric> metrics;
  std::size_t threads = 0;
  std::string output;

  // Throws ConfigurationError on inconsistent settings and ResourceError
  // when a rule cannot run at some grid m (Kemeny needs m <= 16).
  void validate() const;
};

ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig read_experiment_config(const std::filesystem::path& path);
std::string model_name(SampleModel model);
std::string metric_name(Metric metric);

struct GridPoint {
  std::string model;
  std::string param;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct PairwiseRow {
  GridPoint point;
  std::string rule_a, rule_b;
  double mean_norm_swap = 0;
  double stddev = 0;  // sample standard deviation, 0 for one sample
};

struct DisplacementRow {
  GridPoint point;
  std::string rule_a, rule_b;
  std::size_t position = 0;  // 1-based
  double mean_displacement = 0;
};

struct TieRow {
  GridPoint point;
  std::string rule;
  double mean_tie_rounds = 0;
};

struct ExperimentResults {
  std::vector<PairwiseRow> pairwise;
  std::vector<DisplacementRow> displacement;
  std::vector<TieRow> ties;
};

// One sampling pass computing every metric listed in the config. Sample i
// at grid point g draws its profile and its uniform tie order from seeds
// derived from (seed, g, i); means use pairwise summation over the samples
// in index order, so results do not depend on the thread count.
ExperimentResults run_experiment(const ExperimentConfig& config);

std::vector<PairwiseRow> run_pairwise_distance(const ExperimentConfig& config);
// Pairwise rows restricted to pairs with Kemeny on one side.
std::vector<PairwiseRow> run_kemeny_comparison(const ExperimentConfig& config);
std::vector<DisplacementRow> run_position_displacement(const ExperimentConfig& config);
std::vector<TieRow> run_tie_statistics(const ExperimentConfig& config);

// Each CSV starts with one '#' line recording how Kemeny ties are broken.
void write_pairwise_csv(std::ostream& out, const std::vector<PairwiseRow>& rows);
void write_displacement_csv(std::ostream& out, const std::vector<DisplacementRow>& rows);
void write_ties_csv(std::ostream& out, const std::vector<TieRow>& rows);

// Writes <dir>/pairwise.csv, displacement.csv and ties.csv for the metrics
// that were requested and returns the paths written.
std::vector<std::filesystem::path> write_experiment_csvs(const std::filesystem::path& dir,
                                                         const ExperimentConfig& config,
                                                         const ExperimentResults& results);

// Sum by recursive halving; deterministic for a fixed input order.
double pairwise_sum(const double* values, std::size_t count);

}  // namespace rankagg
