#include "rankagg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "rankagg/errors.hpp"
#include "rankagg/kemeny.hpp"
#include "rankagg/profile_io.hpp"
#include "rankagg/random.hpp"
#include "rankagg/sampling.hpp"

namespace rankagg {
namespace {

constexpr const char* kKemenyNote =
    "# kemeny ties: the optimal ranking earliest under the sampled tie order, compared "
    "lexicographically";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line, std::string_view key) {
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError(line, "bad value '" + std::string(s) + "' for " + std::string(key));
  }
  return value;
}

// Rule names contain ':' and custom paths may contain '/', so pairs are
// written "a vs b".
std::pair<RuleId, RuleId> parse_pair(std::string_view s, std::size_t line) {
  const auto sep = s.find(" vs ");
  if (sep == std::string_view::npos) {
    throw ParseError(line, "pair '" + std::string(s) + "' must read '<rule> vs <rule>'");
  }
  return {RuleId::parse(trim(s.substr(0, sep))), RuleId::parse(trim(s.substr(sep + 4)))};
}

template <typename T>
std::string fixed(T value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

std::vector<RuleId> rules_to_run(const ExperimentConfig& c) {
  std::vector<RuleId> out;
  const auto add = [&](const RuleId& r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  for (const auto& r : c.rules) add(r);
  for (const auto& [a, b] : c.pairs) {
    add(a);
    add(b);
  }
  return out;
}

bool wants(const ExperimentConfig& c, Metric m) {
  return std::find(c.metrics.begin(), c.metrics.end(), m) != c.metrics.end();
}

std::size_t index_of(const std::vector<RuleId>& rules, const RuleId& r) {
  return static_cast<std::size_t>(std::find(rules.begin(), rules.end(), r) - rules.begin());
}

Profile draw_profile(const ExperimentConfig& c, const std::string& param, std::size_t m,
                     std::size_t n, double phi, std::uint64_t seed) {
  switch (c.model) {
    case SampleModel::Mallows: {
      MallowsParams mp;
      mp.central = Ranking::identity(m);
      mp.norm_phi = parse_number<double>(param, 0, "params");
      mp.phi = phi;
      return sample_mallows(mp, n, seed);
    }
    case SampleModel::Euclidean:
      return sample_euclidean(parse_number<std::size_t>(param, 0, "params"), m, n, seed);
    case SampleModel::ImpartialCulture:
      return sample_impartial_culture(m, n, seed);
  }
  throw ConfigurationError("unknown model");
}

}  // namespace

double pairwise_sum(const double* values, std::size_t count) {
  if (count <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < count; ++i) s += values[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

std::string model_name(SampleModel model) {
  switch (model) {
    case SampleModel::Mallows:
      return "mallows";
    case SampleModel::Euclidean:
      return "euclidean";
    case SampleModel::ImpartialCulture:
      return "ic";
  }
  return "?";
}

std::string metric_name(Metric metric) {
  switch (metric) {
    case Metric::Pairwise:
      return "pairwise";
    case Metric::Displacement:
      return "displacement";
    case Metric::Ties:
      return "ties";
  }
  return "?";
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig c;
  std::map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.emplace(key, line_no).second) throw ParseError(line_no, "duplicate key " + key);
    const auto items = split_list(value);

    if (key == "model") {
      if (value == "mallows") {
        c.model = SampleModel::Mallows;
      } else if (value == "euclidean") {
        c.model = SampleModel::Euclidean;
      } else if (value == "ic") {
        c.model = SampleModel::ImpartialCulture;
      } else {
        throw ParseError(line_no, "unknown model '" + std::string(value) + "'");
      }
    } else if (key == "params") {
      c.params = items;
    } else if (key == "m" || key == "n") {
      auto& dest = key == "m" ? c.m : c.n;
      for (const auto& v : items) dest.push_back(parse_number<std::size_t>(v, line_no, key));
    } else if (key == "samples") {
      c.samples = parse_number<std::size_t>(value, line_no, key);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(value, line_no, key);
    } else if (key == "threads") {
      c.threads = parse_number<std::size_t>(value, line_no, key);
    } else if (key == "output") {
      c.output = std::string(value);
    } else if (key == "rules") {
      for (const auto& v : items) c.rules.push_back(RuleId::parse(v));
    } else if (key == "pairs") {
      for (const auto& v : items) c.pairs.push_back(parse_pair(v, line_no));
    } else if (key == "metrics") {
      for (const auto& v : items) {
        if (v == "pairwise") {
          c.metrics.push_back(Metric::Pairwise);
        } else if (v == "displacement") {
          c.metrics.push_back(Metric::Displacement);
        } else if (v == "ties") {
          c.metrics.push_back(Metric::Ties);
        } else {
          throw ParseError(line_no, "unknown metric '" + v + "'");
        }
      }
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  for (const char* key : {"model", "m", "n", "samples", "seed", "metrics"}) {
    if (!seen.count(key)) throw ConfigurationError(std::string("missing key '") + key + "'");
  }
  return c;
}

ExperimentConfig read_experiment_config(const std::filesystem::path& path) {
  return parse_experiment_config(read_text_file(path));
}

void ExperimentConfig::validate() const {
  if (samples == 0) throw ConfigurationError("samples must be at least 1");
  if (m.empty() || n.empty()) throw ConfigurationError("m and n need at least one value");
  if (metrics.empty()) throw ConfigurationError("no metrics requested");
  if (model == SampleModel::ImpartialCulture) {
    if (!params.empty()) throw ConfigurationError("the ic model takes no params");
  } else if (params.empty()) {
    throw ConfigurationError("model " + model_name(model) + " needs params");
  }
  for (const auto& p : params) {
    if (model == SampleModel::Mallows) {
      const double v = parse_number<double>(p, 0, "params");
      if (!(v >= 0.0 && v <= 1.0)) throw ConfigurationError("normalized phi " + p + " not in [0,1]");
    } else if (parse_number<std::size_t>(p, 0, "params") == 0) {
      throw ConfigurationError("euclidean dimension must be at least 1");
    }
  }
  if ((wants(*this, Metric::Pairwise) || wants(*this, Metric::Displacement)) && pairs.empty()) {
    throw ConfigurationError("distance metrics need at least one pair");
  }
  if (wants(*this, Metric::Ties) && rules.empty()) {
    throw ConfigurationError("tie statistics need at least one rule");
  }
  for (const std::size_t mm : m) {
    if (mm < 2 || mm > kMaxMaskCandidates) {
      throw ConfigurationError("m = " + std::to_string(mm) + " outside [2, 64]");
    }
    for (const auto& r : rules_to_run(*this)) {
      if (r.family == RuleFamily::Kemeny) {
        if (mm > KemenyOptions{}.max_candidates) {
          throw ResourceError("kemeny needs m <= " +
                              std::to_string(KemenyOptions{}.max_candidates) + ", got " +
                              std::to_string(mm));
        }
      } else {
        (void)r.system.vector(mm);  // custom systems must cover every m
      }
    }
  }
  for (const std::size_t nn : n) {
    if (nn == 0) throw ConfigurationError("n must be at least 1");
  }
}

ExperimentResults run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::vector<RuleId> rules = rules_to_run(config);
  const bool do_pairwise = wants(config, Metric::Pairwise);
  const bool do_disp = wants(config, Metric::Displacement);
  const bool do_ties = wants(config, Metric::Ties);
  const std::size_t threads = std::max<std::size_t>(
      1, config.threads ? config.threads : std::thread::hardware_concurrency());

  std::vector<std::string> params = config.params;
  if (params.empty()) params.push_back("0");

  ExperimentResults results;
  std::uint64_t grid_index = 0;
  for (const auto& param : params) {
    for (const std::size_t m : config.m) {
      const double phi = config.model == SampleModel::Mallows
                             ? phi_from_norm(m, parse_number<double>(param, 0, "params"))
                             : 0.0;
      for (const std::size_t n : config.n) {
        const std::uint64_t g = grid_index++;
        // Columns per sample: pair distances, then displacement per pair and
        // position, then tie counts per rule.
        const std::size_t pcols = config.pairs.size();
        const std::size_t dcols = do_disp ? pcols * m : 0;
        const std::size_t tcols = do_ties ? config.rules.size() : 0;
        const std::size_t width = pcols + dcols + tcols;
        std::vector<double> table(config.samples * width);

        const auto run_sample = [&](std::size_t i) {
          const std::uint64_t s = derive_seed(config.seed, g, i);
          const Profile p = draw_profile(config, param, m, n, phi, derive_seed(s, 0));
          Rng tie_rng(derive_seed(s, 1));
          const TieBreakOrder tie(uniform_ranking(m, tie_rng));
          std::vector<ExecutionTrace> traces;
          traces.reserve(rules.size());
          for (const auto& r : rules) traces.push_back(run_rule(r, p, tie));
          double* row = table.data() + i * width;
          for (std::size_t k = 0; k < pcols; ++k) {
            const Ranking& a = traces[index_of(rules, config.pairs[k].first)].output;
            const Ranking& b = traces[index_of(rules, config.pairs[k].second)].output;
            row[k] = to_double(normalized_swap_distance(a, b));
            if (do_disp) {
              for (std::size_t pos = 1; pos <= m; ++pos) {
                row[pcols + k * m + pos - 1] = to_double(position_displacement(a, b, pos));
              }
            }
          }
          for (std::size_t k = 0; k < tcols; ++k) {
            row[pcols + dcols + k] = static_cast<double>(
                tie_round_count(traces[index_of(rules, config.rules[k])]));
          }
        };

        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
          for (std::size_t i = next++; i < config.samples; i = next++) run_sample(i);
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < std::min(threads, config.samples); ++t) {
          pool.emplace_back(worker);
        }
        worker();
        for (auto& t : pool) t.join();

        std::vector<double> column(config.samples);
        const auto mean_of = [&](std::size_t col) {
          for (std::size_t i = 0; i < config.samples; ++i) column[i] = table[i * width + col];
          return pairwise_sum(column.data(), column.size()) / static_cast<double>(config.samples);
        };
        const GridPoint point{model_name(config.model), param, m, n, config.samples, config.seed};
        for (std::size_t k = 0; k < pcols && do_pairwise; ++k) {
          const double mean = mean_of(k);
          double sd = 0;
          if (config.samples > 1) {
            for (auto& v : column) v = (v - mean) * (v - mean);
            sd = std::sqrt(pairwise_sum(column.data(), column.size()) /
                           static_cast<double>(config.samples - 1));
          }
          results.pairwise.push_back({point, config.pairs[k].first.name(),
                                      config.pairs[k].second.name(), mean, sd});
        }
        for (std::size_t k = 0; k < pcols && do_disp; ++k) {
          for (std::size_t pos = 1; pos <= m; ++pos) {
            results.displacement.push_back({point, config.pairs[k].first.name(),
                                            config.pairs[k].second.name(), pos,
                                            mean_of(pcols + k * m + pos - 1)});
          }
        }
        for (std::size_t k = 0; k < tcols; ++k) {
          results.ties.push_back({point, config.rules[k].name(), mean_of(pcols + dcols + k)});
        }
      }
    }
  }
  return results;
}

namespace {

ExperimentConfig only(const ExperimentConfig& config, Metric metric) {
  ExperimentConfig c = config;
  c.metrics = {metric};
  return c;
}

}  // namespace

std::vector<PairwiseRow> run_pairwise_distance(const ExperimentConfig& config) {
  return run_experiment(only(config, Metric::Pairwise)).pairwise;
}

std::vector<PairwiseRow> run_kemeny_comparison(const ExperimentConfig& config) {
  ExperimentConfig c = only(config, Metric::Pairwise);
  std::erase_if(c.pairs, [](const auto& pr) {
    return pr.first.family != RuleFamily::Kemeny && pr.second.family != RuleFamily::Kemeny;
  });
  if (c.pairs.empty()) throw ConfigurationError("no pair involves kemeny");
  return run_experiment(c).pairwise;
}

std::vector<DisplacementRow> run_position_displacement(const ExperimentConfig& config) {
  return run_experiment(only(config, Metric::Displacement)).displacement;
}

std::vector<TieRow> run_tie_statistics(const ExperimentConfig& config) {
  return run_experiment(only(config, Metric::Ties)).ties;
}

namespace {

void write_point(std::ostream& out, const GridPoint& p) {
  out << p.model << ',' << p.param << ',' << p.m << ',' << p.n << ',' << p.samples << ','
      << p.seed;
}

}  // namespace

void write_pairwise_csv(std::ostream& out, const std::vector<PairwiseRow>& rows) {
  out << kKemenyNote << '\n'
      << "model,param,m,n,samples,seed,rule_a,rule_b,mean_norm_swap,stddev\n";
  for (const auto& r : rows) {
    write_point(out, r.point);
    out << ',' << r.rule_a << ',' << r.rule_b << ',' << fixed(r.mean_norm_swap) << ','
        << fixed(r.stddev) << '\n';
  }
}

void write_displacement_csv(std::ostream& out, const std::vector<DisplacementRow>& rows) {
  out << kKemenyNote << '\n'
      << "model,param,m,n,samples,seed,rule_a,rule_b,position,mean_displacement\n";
  for (const auto& r : rows) {
    write_point(out, r.point);
    out << ',' << r.rule_a << ',' << r.rule_b << ',' << r.position << ','
        << fixed(r.mean_displacement) << '\n';
  }
}

void write_ties_csv(std::ostream& out, const std::vector<TieRow>& rows) {
  out << kKemenyNote << '\n' << "model,param,m,n,samples,seed,rule,mean_tie_rounds\n";
  for (const auto& r : rows) {
    write_point(out, r.point);
    out << ',' << r.rule << ',' << fixed(r.mean_tie_rounds) << '\n';
  }
}

std::vector<std::filesystem::path> write_experiment_csvs(const std::filesystem::path& dir,
                                                         const ExperimentConfig& config,
                                                         const ExperimentResults& results) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  const auto emit = [&](const char* file, const auto& writer) {
    std::ostringstream text;
    writer(text);
    written.push_back(dir / file);
    write_text_file(written.back(), text.str());
  };
  if (wants(config, Metric::Pairwise)) {
    emit("pairwise.csv", [&](std::ostream& o) { write_pairwise_csv(o, results.pairwise); });
  }
  if (wants(config, Metric::Displacement)) {
    emit("displacement.csv",
         [&](std::ostream& o) { write_displacement_csv(o, results.displacement); });
  }
  if (wants(config, Metric::Ties)) {
    emit("ties.csv", [&](std::ostream& o) { write_ties_csv(o, results.ties); });
  }
  return written;
}

}  // namespace rankagg
