// authmech: design and evaluate multi-credential authentication policies.
//
// Subcommands:
//   search      branch-and-bound search for a delta-optimal mechanism
//   exhaustive  ground-truth optimum over every monotone function (n <= 5)
//   scenarios   ranked scenario probabilities with cumulative mass
//   casestudy   sweep a credential family and emit a results CSV
//   simulate    execution-semantics sweep of the bounded simulator (n <= 3)
//   evaluate    score a mechanism file against a fault model
//
// Exit codes: 0 ok, 2 malformed input, 3 node limit exhausted, 4 size guard.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "auth/baselines.hpp"
#include "auth/casestudy.hpp"
#include "auth/credmodel.hpp"
#include "auth/execsim.hpp"
#include "auth/mechanism.hpp"
#include "auth/search.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNodeLimit = 3;
constexpr int kExitGuard = 4;

double default_delta(int n) { return n <= 9 ? 1e-5 : 1e-6; }

std::string format_probability(double p) {
  std::ostringstream out;
  out << std::setprecision(17) << p;
  return out.str();
}

std::vector<std::string> vector_strings(const auth::PartialTruthTable& table) {
  std::vector<std::string> out;
  for (auth::AvailabilityVector v : auth::minimal_true_vectors(table)) {
    out.push_back(auth::to_bitstring(v, table.n()));
  }
  return out;
}

std::string joined_vectors(const auth::PartialTruthTable& table) {
  std::string out;
  for (const std::string& s : vector_strings(table)) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

json stats_json(const auth::SearchStats& stats) {
  return json{{"nodes_visited", stats.nodes_visited},
              {"branches_pruned", stats.branches_pruned},
              {"completions_evaluated", stats.completions_evaluated},
              {"best_updates", stats.best_updates},
              {"elapsed_seconds", stats.elapsed.count()}};
}

struct ReportOptions {
  std::string format = "text";
  std::string algorithm = "search";
};

void print_mechanism_report(const auth::PartialTruthTable& table, double success,
                            std::optional<double> delta, const auth::SearchStats* stats,
                            bool certified, const ReportOptions& options) {
  const double failure = 1.0 - success;
  if (options.format == "json") {
    json j{{"n", table.n()},
           {"minimal_true_vectors", vector_strings(table)},
           {"success_probability", success},
           {"failure_probability", failure}};
    if (delta) j["delta"] = *delta;
    if (stats) {
      j["certified"] = certified;
      j["stats"] = stats_json(*stats);
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (options.format == "csv") {
    std::cout << "n,algorithm,failure_probability,mechanism\n";
    std::cout << table.n() << ',' << options.algorithm << ',' << format_probability(failure)
              << ',' << joined_vectors(table) << '\n';
    return;
  }
  std::cout << "n: " << table.n() << '\n' << "mechanism:\n";
  for (const std::string& s : vector_strings(table)) {
    std::cout << "  " << s << '\n';
  }
  std::cout << "success_probability: " << format_probability(success) << '\n'
            << "failure_probability: " << format_probability(failure) << '\n';
  if (delta) {
    std::cout << "delta: " << format_probability(*delta) << '\n';
  }
  if (stats) {
    std::cout << "certified: " << (certified ? "yes" : "no") << '\n'
              << "stats: nodes=" << stats->nodes_visited << " pruned=" << stats->branches_pruned
              << " completions=" << stats->completions_evaluated
              << " best_updates=" << stats->best_updates << " elapsed_s=" << stats->elapsed.count()
              << '\n';
  }
}

struct SearchArgs {
  std::string model_path;
  double delta = 0.0;  // 0 means "use the per-n default"
  std::optional<std::uint64_t> node_limit;
  std::string format = "text";
  std::string save_mechanism;
};

int run_search_cmd(const SearchArgs& args) {
  const auth::FaultModel model = auth::load_fault_model(args.model_path);
  auth::SearchParams params;
  params.delta = args.delta > 0.0 ? args.delta : default_delta(model.size());
  params.node_limit = args.node_limit;
  const auth::SearchResult result = auth::scenario_based_search(model, params);
  if (!args.save_mechanism.empty()) {
    std::ofstream out(args.save_mechanism);
    if (!out) throw auth::ParseError("cannot write mechanism file: " + args.save_mechanism);
    out << auth::format_mechanism(result.best_table);
  }
  print_mechanism_report(result.best_table, result.success_probability, params.delta,
                         &result.stats, result.certified, {args.format, "search"});
  return result.certified ? 0 : kExitNodeLimit;
}

int run_exhaustive_cmd(const std::string& model_path, const std::string& format) {
  const auth::FaultModel model = auth::load_fault_model(model_path);
  const auth::ExhaustiveResult result = auth::exhaustive_search(model);
  print_mechanism_report(result.best_table, result.success_probability, std::nullopt, nullptr,
                         true, {format, "exhaustive"});
  return 0;
}

int run_scenarios_cmd(const std::string& model_path, std::uint64_t top_k) {
  const auth::FaultModel model = auth::load_fault_model(model_path);
  const auth::ScenarioList list = auth::enumerate_viable(model, /*drop_zero=*/true);
  const int n = model.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  std::cout << "# total=" << total << " viable=" << auth::viable_scenario_count(n)
            << " positive=" << list.size() << '\n';
  std::cout << "rank,user,attacker,probability,cumulative\n";
  const std::uint64_t count =
      top_k == 0 ? list.size() : std::min<std::uint64_t>(top_k, list.size());
  double cumulative = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auth::WeightedScenario& entry = list.entries[i];
    cumulative += entry.probability;
    std::cout << i + 1 << ',' << auth::to_bitstring(entry.scenario.user, n) << ','
              << auth::to_bitstring(entry.scenario.attacker, n) << ','
              << format_probability(entry.probability) << ',' << format_probability(cumulative)
              << '\n';
  }
  return 0;
}

struct CaseStudyArgs {
  std::string family;
  int max_n = 0;        // hetero/uniform: largest total credential count
  int min_n = 2;        // hetero/uniform: smallest total credential count
  int n_regular = 0;    // wallet/questions: largest regular count (swept from 1)
  int n_weak = 0;       // wallet/questions: fixed weak count
  double delta = 0.0;
  double budget_seconds = 0.0;  // 0 = unlimited
  std::string out_path;
  std::string model_dir;  // when set, write each swept fault model here as CSV
};

int run_casestudy_cmd(const CaseStudyArgs& args) {
  const auth::CaseFamily family = auth::parse_case_family(args.family);
  const bool weighted = family == auth::CaseFamily::Wallet || family == auth::CaseFamily::Questions;

  std::vector<auth::CaseStudyConfig> points;
  if (weighted) {
    if (args.n_regular < 1) throw auth::ParseError("--n-regular is required for this family");
    for (int r = 1; r <= args.n_regular; ++r) {
      points.push_back({family, r, args.n_weak});
    }
  } else {
    if (args.max_n < args.min_n) throw auth::ParseError("--max-n is required for this family");
    for (int n = args.min_n; n <= args.max_n; ++n) {
      points.push_back({family, n, 0});
    }
  }

  std::ofstream file;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw auth::ParseError("cannot write results file: " + args.out_path);
  }
  std::ostream& out = args.out_path.empty() ? std::cout : file;

  out << "n,algorithm,failure_probability,mechanism\n";
  const auto start = std::chrono::steady_clock::now();
  for (const auth::CaseStudyConfig& point : points) {
    const int total = point.n_regular + point.n_weak;
    if (total > 12) {
      std::cerr << "warning: skipping n=" << total << " (sweep is capped at 12 credentials)\n";
      continue;
    }
    if (args.budget_seconds > 0.0) {
      const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
      if (used.count() > args.budget_seconds) {
        std::cerr << "warning: skipping n=" << total << " and beyond (budget exhausted)\n";
        break;
      }
    }
    const auth::FaultModel model = auth::case_study_model(point);
    if (!args.model_dir.empty()) {
      std::ostringstream name;
      name << args.model_dir << '/' << args.family << "_r" << point.n_regular;
      if (point.n_weak > 0) name << "_w" << point.n_weak;
      name << ".csv";
      std::ofstream model_out(name.str());
      if (!model_out) throw auth::ParseError("cannot write model file: " + name.str());
      auth::write_fault_model_csv(model_out, model);
    }
    auth::SearchParams params;
    params.delta = args.delta > 0.0 ? args.delta : default_delta(total);
    const auth::SearchResult found = auth::scenario_based_search(model, params);
    out << total << ",search," << format_probability(1.0 - found.success_probability) << ','
        << joined_vectors(found.best_table) << '\n';

    const auth::SymmetricResult symmetric = auth::best_symmetric(model);
    out << total << ",symmetric," << format_probability(1.0 - symmetric.success_probability)
        << ',' << symmetric.k << "-of-" << total << '\n';

    if (total <= 5) {
      const auth::ExhaustiveResult oracle = auth::exhaustive_search(model);
      out << total << ",exhaustive," << format_probability(1.0 - oracle.success_probability)
          << ',' << joined_vectors(oracle.best_table) << '\n';
    }
  }
  return 0;
}

int run_simulate_cmd(int n, int horizon) {
  if (n < 1 || n > 3) {
    throw auth::GuardError("simulation sweeps are limited to 3 credentials");
  }
  const auth::MonotoneCatalog catalog = auth::enumerate_monotone(n);
  const std::uint32_t vectors = std::uint32_t{1} << n;
  std::uint64_t checks = 0, mismatches = 0;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auth::PartialTruthTable table = catalog.table(i);
    for (std::uint32_t u = 0; u < vectors; ++u) {
      for (std::uint32_t a = 0; a < vectors; ++a) {
        const auth::Scenario s{{u}, {a}};
        const bool expected = table.row(u) == auth::Trit::True &&
                              table.row(a) == auth::Trit::False;
        const bool simulated = auth::check_success(table, s, horizon);
        ++checks;
        if (simulated != expected) ++mismatches;
      }
    }
  }
  std::cout << "n=" << n << " horizon=" << horizon << " functions=" << catalog.size()
            << " scenarios=" << vectors * vectors << " checks=" << checks
            << " mismatches=" << mismatches << (mismatches == 0 ? " PASS" : " FAIL") << '\n';
  return mismatches == 0 ? 0 : 1;
}

int run_evaluate_cmd(const std::string& model_path, const std::string& mechanism_path,
                     const std::string& format) {
  const auth::FaultModel model = auth::load_fault_model(model_path);
  const auth::PartialTruthTable table = auth::load_mechanism(mechanism_path);
  if (table.n() != model.size()) {
    throw auth::ParseError("mechanism is over " + std::to_string(table.n()) +
                           " credentials but the model has " + std::to_string(model.size()));
  }
  const auth::ScenarioList scenarios = auth::enumerate_viable(model, /*drop_zero=*/true);
  const auth::MechanismSummary summary = auth::summarize(table, scenarios);
  const auth::SymmetricResult symmetric = auth::best_symmetric(model);

  std::string dominance = "skipped_n_gt_8";
  if (model.size() <= 8) {
    dominance = auth::to_string(
        auth::dominance_relation(table, auth::threshold_table(model.size(), symmetric.k)));
  }

  if (format == "json") {
    json j{{"n", table.n()},
           {"minimal_true_vectors", vector_strings(table)},
           {"success_probability", summary.success_probability},
           {"failure_probability", summary.failure_probability},
           {"best_symmetric",
            json{{"k", symmetric.k},
                 {"success_probability", symmetric.success_probability},
                 {"failure_probability", 1.0 - symmetric.success_probability}}},
           {"dominance_vs_symmetric", dominance}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  print_mechanism_report(table, summary.success_probability, std::nullopt, nullptr, true,
                         {format, "evaluate"});
  if (format == "text") {
    std::cout << "best_symmetric: " << symmetric.k << "-of-" << model.size()
              << " failure=" << format_probability(1.0 - symmetric.success_probability) << '\n'
              << "dominance_vs_symmetric: " << dominance << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Authentication mechanism design from credential fault probabilities"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "Find a delta-optimal mechanism");
  search->add_option("model", search_args.model_path, "Fault-model CSV")->required();
  search->add_option("--delta", search_args.delta, "Optimality slack in (0,1)");
  std::uint64_t node_limit_value = 0;
  CLI::Option* node_limit_opt =
      search->add_option("--node-limit", node_limit_value, "Abort after this many search nodes");
  search->add_option("--format", search_args.format, "Output format")
      ->check(CLI::IsMember(formats));
  search->add_option("--save-mechanism", search_args.save_mechanism,
                     "Write the found mechanism to this file");

  std::string exhaustive_model, exhaustive_format = "text";
  CLI::App* exhaustive = app.add_subcommand("exhaustive", "Brute-force optimum (n <= 5)");
  exhaustive->add_option("model", exhaustive_model, "Fault-model CSV")->required();
  exhaustive->add_option("--format", exhaustive_format, "Output format")
      ->check(CLI::IsMember(formats));

  std::string scenarios_model;
  std::uint64_t scenarios_top = 0;
  CLI::App* scenarios = app.add_subcommand("scenarios", "Ranked scenario probabilities");
  scenarios->add_option("model", scenarios_model, "Fault-model CSV")->required();
  scenarios->add_option("--top", scenarios_top, "Print only the first K rows (0 = all)");

  CaseStudyArgs case_args;
  CLI::App* casestudy = app.add_subcommand("casestudy", "Sweep a credential family");
  casestudy->add_option("--family", case_args.family, "hetero, uniform, wallet, or questions")
      ->required();
  casestudy->add_option("--max-n", case_args.max_n, "Largest total count (hetero/uniform)");
  casestudy->add_option("--min-n", case_args.min_n, "Smallest total count (hetero/uniform)");
  casestudy->add_option("--n-regular", case_args.n_regular,
                        "Largest regular count (wallet/questions)");
  casestudy->add_option("--n-weak", case_args.n_weak, "Weak credential count (wallet/questions)");
  casestudy->add_option("--delta", case_args.delta, "Optimality slack in (0,1)");
  casestudy->add_option("--budget-seconds", case_args.budget_seconds,
                        "Skip remaining points once this much wall clock is spent");
  casestudy->add_option("--out", case_args.out_path, "Write the results CSV here");
  casestudy->add_option("--emit-model-dir", case_args.model_dir,
                        "Also write each swept fault model as a CSV into this directory");

  int simulate_n = 0, simulate_horizon = 3;
  CLI::App* simulate = app.add_subcommand("simulate", "Execution-semantics sweep (n <= 3)");
  simulate->add_option("--n", simulate_n, "Credential count")->required();
  simulate->add_option("--horizon", simulate_horizon, "Step budget per execution");

  std::string evaluate_model, evaluate_mechanism, evaluate_format = "text";
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score a mechanism file");
  evaluate->add_option("model", evaluate_model, "Fault-model CSV")->required();
  evaluate->add_option("mechanism", evaluate_mechanism, "Mechanism text file")->required();
  evaluate->add_option("--format", evaluate_format, "Output format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (node_limit_opt->count() > 0) search_args.node_limit = node_limit_value;
    if (search->parsed()) return run_search_cmd(search_args);
    if (exhaustive->parsed()) return run_exhaustive_cmd(exhaustive_model, exhaustive_format);
    if (scenarios->parsed()) return run_scenarios_cmd(scenarios_model, scenarios_top);
    if (casestudy->parsed()) return run_casestudy_cmd(case_args);
    if (simulate->parsed()) return run_simulate_cmd(simulate_n, simulate_horizon);
    if (evaluate->parsed()) return run_evaluate_cmd(evaluate_model, evaluate_mechanism,
                                                    evaluate_format);
  } catch (const auth::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const auth::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
