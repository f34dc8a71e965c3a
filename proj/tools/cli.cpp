#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "rankagg/axioms.hpp"
#include "rankagg/determination.hpp"
#include "rankagg/errors.hpp"
#include "rankagg/experiments.hpp"
#include "rankagg/kemeny.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/profile_io.hpp"
#include "rankagg/random.hpp"
#include "rankagg/reductions.hpp"
#include "rankagg/rules.hpp"
#include "rankagg/sampling.hpp"

namespace rankagg::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::size_t threads = 0;
  std::size_t limit = 0;  // 0: no limit
  std::string output;
};

// Writes to -o when given, otherwise to stdout.
void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.output.empty()) {
    out << text;
  } else {
    write_text_file(g.output, text);
    out << g.output << '\n';
  }
}

std::uint64_t require_seed(const Globals& g, const char* command) {
  if (!g.seed) throw UsageError(std::string(command) + " needs --seed");
  return *g.seed;
}

std::vector<Candidate> parse_candidate_list(const std::string& text) {
  std::vector<Candidate> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Candidate>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad candidate '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

TieBreakOrder resolve_tiebreak(const std::string& list, std::optional<std::uint64_t> seed,
                               std::size_t m, std::ostream& err) {
  if (!list.empty() && seed) throw UsageError("give --tiebreak or --tiebreak-seed, not both");
  Ranking order = Ranking::identity(m);
  if (!list.empty()) {
    auto cands = parse_candidate_list(list);
    if (cands.size() != m) {
      throw DimensionError("tie-break order has " + std::to_string(cands.size()) +
                           " candidates, profile has " + std::to_string(m));
    }
    order = Ranking(std::move(cands));
  } else if (seed) {
    Rng rng(*seed);
    order = uniform_ranking(m, rng);
  }
  err << "tiebreak: " << order.to_string() << '\n';
  return TieBreakOrder(std::move(order));
}

RuleId parse_rule(const std::string& text) {
  try {
    return RuleId::parse(text);
  } catch (const ConfigurationError& e) {
    throw UsageError(e.what());
  }
}

std::string join(const std::vector<Candidate>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank aggregation with scoring-based rules and Kemeny", "rankagg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_option("--limit", g.limit, "Print at most this many rankings");
  app.add_option("-o,--output", g.output, "Output file or directory");

  std::function<void()> action;

  // sample
  auto* sample = app.add_subcommand("sample", "Sample a profile");
  std::string model;
  std::size_t sm = 0, sn = 0, dim = 2;
  double norm_phi = 0;
  sample->add_option("--model", model)->required()->check(CLI::IsMember({"mallows", "euclidean", "ic"}));
  sample->add_option("--m", sm)->required();
  sample->add_option("--n", sn)->required();
  auto* phi_opt = sample->add_option("--norm-phi", norm_phi);
  sample->add_option("--dim", dim);
  sample->callback([&] {
    action = [&] {
      const std::uint64_t seed = require_seed(g, "sample");
      Profile p;
      if (model == "mallows") {
        if (!*phi_opt) throw UsageError("mallows needs --norm-phi");
        p = sample_mallows(MallowsParams::normalized(sm, norm_phi), sn, seed);
      } else if (model == "euclidean") {
        p = sample_euclidean(dim, sm, sn, seed);
      } else {
        p = sample_impartial_culture(sm, sn, seed);
      }
      emit(g, out, serialize_profile(p));
    };
  });

  // aggregate
  auto* aggregate_cmd = app.add_subcommand("aggregate", "Tie-broken output ranking");
  std::string rule_text, tiebreak, profile_path;
  std::optional<std::uint64_t> tiebreak_seed;
  bool trace = false;
  aggregate_cmd->add_option("--rule", rule_text)->required();
  aggregate_cmd->add_option("--tiebreak", tiebreak, "Comma-separated candidate order");
  aggregate_cmd->add_option("--tiebreak-seed", tiebreak_seed);
  aggregate_cmd->add_flag("--trace", trace, "Also print each round to stderr");
  aggregate_cmd->add_option("profile", profile_path)->required();
  aggregate_cmd->callback([&] {
    action = [&] {
      const RuleId rule = parse_rule(rule_text);
      const Profile p = read_profile(profile_path);
      const TieBreakOrder tie = resolve_tiebreak(tiebreak, tiebreak_seed, p.num_candidates(), err);
      const ExecutionTrace t = run_rule(rule, p, tie);
      if (trace) {
        for (const auto& r : t.rounds) {
          err << "round " << r.round + 1 << ": " << r.eliminated
              << (r.tie ? " (tie of " + std::to_string(r.tied) + ")" : "") << '\n';
        }
      }
      emit(g, out, t.output.to_string() + "\n");
    };
  });

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All rankings under any tie-breaking");
  std::size_t enum_bound = EnumerationOptions{}.max_candidates;
  enumerate_cmd->add_option("--rule", rule_text)->required();
  enumerate_cmd->add_option("--max-candidates", enum_bound);
  enumerate_cmd->add_option("profile", profile_path)->required();
  enumerate_cmd->callback([&] {
    action = [&] {
      const RuleId rule = parse_rule(rule_text);
      const auto all = enumerate_selected(rule, read_profile(profile_path), {enum_bound});
      std::ostringstream text;
      std::size_t shown = 0;
      for (const auto& r : all) {
        if (g.limit && shown++ == g.limit) break;
        text << r.to_string() << '\n';
      }
      emit(g, out, text.str());
    };
  });

  // determine
  auto* determine = app.add_subcommand("determine", "Position-k / Top-k determination");
  Candidate cand = 0;
  std::size_t position = 1;
  std::string mode = "exact", algo = "auto";
  determine->add_option("--rule", rule_text)->required();
  determine->add_option("--candidate", cand)->required();
  determine->add_option("--position", position)->required();
  determine->add_option("--mode", mode)->check(CLI::IsMember({"exact", "topk"}));
  determine->add_option("--algo", algo)->check(
      CLI::IsMember({"auto", "dp", "stv", "bottomlist", "brute"}));
  determine->add_option("profile", profile_path)->required();
  determine->callback([&] {
    action = [&] {
      DeterminationQuery q{parse_rule(rule_text), cand, position,
                           mode == "topk" ? QueryMode::TopK : QueryMode::ExactPosition};
      const DecisionAlgorithm a = algo == "dp"           ? DecisionAlgorithm::SubsetDp
                                  : algo == "stv"        ? DecisionAlgorithm::Stv
                                  : algo == "bottomlist" ? DecisionAlgorithm::BottomList
                                  : algo == "brute"      ? DecisionAlgorithm::Brute
                                                         : DecisionAlgorithm::Auto;
      const auto r = decide(read_profile(profile_path), q, a);
      emit(g, out, r.answer ? "YES\n" + join(r.witness) + "\n" : std::string("NO\n"));
    };
  });

  // kemeny
  auto* kemeny = app.add_subcommand("kemeny", "Optimal Kemeny value and rankings");
  std::size_t kemeny_bound = KemenyOptions{}.max_candidates;
  kemeny->add_option("--max-candidates", kemeny_bound);
  kemeny->add_option("profile", profile_path)->required();
  kemeny->callback([&] {
    action = [&] {
      const auto res = kemeny_rankings(read_profile(profile_path), {kemeny_bound, g.limit});
      std::ostringstream text;
      text << "optimum " << res.optimum << '\n';
      for (const auto& r : res.rankings) text << r.to_string() << '\n';
      if (res.truncated) err << "output truncated at " << g.limit << " rankings\n";
      emit(g, out, text.str());
    };
  });

  // realize
  auto* realize = app.add_subcommand("realize", "Profile with a given weighted majority graph");
  std::string realize_mode, input_path;
  realize->add_option("--mode", realize_mode)->required()->check(
      CLI::IsMember({"mcgarvey", "bilevel"}));
  realize->add_option("input", input_path)->required();
  realize->callback([&] {
    action = [&] {
      const std::string text = read_text_file(input_path);
      const Profile p = realize_mode == "mcgarvey" ? mcgarvey_realize(parse_graph(text))
                                                   : bilevel_realize(parse_bilevel(text));
      emit(g, out, serialize_profile(p));
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build a hardness-reduction profile");
  std::string reduce_type;
  reduce->add_option("--type", reduce_type)->required()->check(
      CLI::IsMember({"stv-sat", "stv-vc", "coombs-clique", "baldwin-vc", "seqwiveto-hs"}));
  reduce->add_option("--input", input_path)->required();
  reduce->callback([&] {
    action = [&] {
      const std::string text = read_text_file(input_path);
      ReductionInstance inst;
      if (reduce_type == "stv-sat") {
        inst = stv_from_sat(parse_dimacs_cnf(text));
      } else if (reduce_type == "seqwiveto-hs") {
        inst = seqwi_veto_topk_from_hitting_set(parse_hitting_set(text));
      } else {
        const auto [graph, k] = parse_graph_instance(text);
        inst = reduce_type == "stv-vc"          ? stv_from_cubic_vc(graph, k)
               : reduce_type == "coombs-clique" ? coombs_from_regular_clique(graph, k)
                                                : baldwin8_from_cubic_vc(graph, k);
      }
      const auto& q = inst.query;
      err << "query: rule " << inst.rule.name() << ", candidate " << q.d << ", "
          << (q.mode == QueryMode::TopK ? "top " : "position ") << q.k << '\n';
      emit(g, out, serialize_profile(inst.profile));
    };
  });

  // axioms
  auto* axioms = app.add_subcommand("axioms", "Check or search for axiom violations");
  std::string axiom_text, clones_text;
  bool search = false;
  SearchOptions so;
  std::vector<std::string> check_files;
  axioms->add_option("--axiom", axiom_text)->required();
  axioms->add_option("--rule", rule_text)->required();
  auto* search_flag = axioms->add_flag("--search", search, "Sample random witnesses");
  axioms->add_option("--budget", so.budget)->needs(search_flag);
  axioms->add_option("--m-max", so.m_max)->needs(search_flag);
  axioms->add_option("--n-max", so.n_max)->needs(search_flag);
  auto* check_opt = axioms->add_option("--check", check_files, "Witness profile files");
  axioms->add_option("--clones", clones_text, "Comma-separated clone set")->needs(check_opt);
  search_flag->excludes(check_opt);
  axioms->callback([&] {
    action = [&] {
      AxiomId axiom;
      try {
        axiom = parse_axiom(axiom_text);
      } catch (const ConfigurationError& e) {
        throw UsageError(e.what());
      }
      const RuleId rule = parse_rule(rule_text);
      std::ostringstream text;
      if (search) {
        so.seed = require_seed(g, "axioms --search");
        so.threads = g.threads;
        const auto found = search_counterexample(axiom, rule, so);
        if (!found) {
          text << "NONE\n";
        } else {
          text << "VIOLATED " << found->details << '\n'
               << serialize_profile(found->witness.first);
          if (found->witness.second) text << "---\n" << serialize_profile(*found->witness.second);
          if (!found->witness.clones.empty()) text << "clones " << join(found->witness.clones) << '\n';
        }
      } else {
        if (check_files.empty() || check_files.size() > 2) {
          throw UsageError("--check takes one or two profile files");
        }
        AxiomWitness w;
        w.first = read_profile(check_files[0]);
        if (check_files.size() == 2) w.second = read_profile(check_files[1]);
        if (!clones_text.empty()) w.clones = parse_candidate_list(clones_text);
        const AxiomCheck c = check_axiom_instance(axiom, rule, w);
        text << (c.holds ? "HOLDS" : "VIOLATED " + c.details) << '\n';
      }
      emit(g, out, text.str());
    };
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a simulation config, write CSVs");
  std::string config_path;
  experiment->add_option("--config", config_path)->required();
  experiment->callback([&] {
    action = [&] {
      ExperimentConfig c = read_experiment_config(config_path);
      if (g.seed) c.seed = *g.seed;
      if (g.threads) c.threads = g.threads;
      const std::string dir = !g.output.empty() ? g.output : c.output;
      if (dir.empty()) throw UsageError("experiment needs -o or an output key in the config");
      const auto results = run_experiment(c);
      for (const auto& path : write_experiment_csvs(dir, c, results)) {
        out << path.string() << '\n';
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  action();
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rankagg::cli
