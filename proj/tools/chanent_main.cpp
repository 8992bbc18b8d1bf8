// Command line driver: simulate, statmech, oracle, toy, compare, reproduce.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chanent/common/rational.h"
#include "chanent/runner/config.h"
#include "chanent/runner/runner.h"

namespace {

using chanent::runner::ConfigError;
using chanent::runner::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

void diagnostic(int code, const std::string& kind, const std::string& message) {
  Json line{{"level", "error"}, {"exit_code", code}, {"kind", kind}, {"message", message}};
  std::cerr << line.dump() << std::endl;
}

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON experiment config");
    app->add_option("--set", sets, "Override a config key (key=value); repeatable");
    app->add_option("--workers", workers, "Worker threads (results do not depend on it)");
    app->add_option("--seed", seed, "Base seed");
    app->add_option("--out", out, "Output directory");
  }

  // Flags given on the command line win over --set, which wins over the file.
  Json resolve(Json defaults) const {
    Json json = std::move(defaults);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot open config file " + config_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      Json file = Json::parse(buffer.str(), nullptr, false, true);
      if (file.is_discarded() || !file.is_object()) throw ConfigError("config file " + config_path + " is not a JSON object");
      for (const auto& [key, value] : file.items()) json[key] = value;
    }
    for (const auto& s : sets) chanent::runner::apply_override(json, s);
    if (workers) json["workers"] = *workers;
    if (seed) json["base_seed"] = *seed;
    if (out) json["output"] = *out;
    return json;
  }
};

void print_files(const chanent::runner::RunReport& report) {
  for (const auto& file : report.files) std::cout << (report.dir / file).string() << "\n";
}

void print_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::cout << in.rdbuf();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of random quantum channels"};
  app.require_subcommand(1);
  chanent::runner::RunContext context;
  for (int i = 0; i < argc; ++i) context.argv.emplace_back(argv[i]);

  CommonFlags sim_flags;
  auto* simulate = app.add_subcommand("simulate", "Stabilizer trajectory ensembles");
  sim_flags.attach(simulate);

  CommonFlags stat_flags;
  auto* statmech = app.add_subcommand("statmech", "Large-d domain-wall closed forms");
  stat_flags.attach(statmech);
  bool closed_forms = false;
  std::optional<int> stat_d;
  std::optional<double> stat_p;
  std::optional<std::size_t> stat_l, stat_t;
  statmech->add_flag("--closed-forms", closed_forms, "Tabulate the closed-form partition functions");
  statmech->add_option("--d", stat_d, "Local dimension");
  statmech->add_option("--p", stat_p, "Noise strength");
  statmech->add_option("--L", stat_l, "System size");
  statmech->add_option("--t", stat_t, "Depth");

  CommonFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "Exact two-copy twirl averages on small chains");
  oracle_flags.attach(oracle);
  std::optional<int> oracle_d;
  std::optional<std::string> oracle_p;
  std::optional<std::size_t> oracle_l, oracle_t;
  oracle->add_option("--d", oracle_d, "Local dimension");
  oracle->add_option("--p", oracle_p, "Noise strength (exact decimal or fraction)");
  oracle->add_option("--L", oracle_l, "System size");
  oracle->add_option("--t", oracle_t, "Maximum depth");

  CommonFlags toy_flags;
  auto* toy = app.add_subcommand("toy", "One-qudit closed-form curves");
  toy_flags.attach(toy);
  std::optional<int> toy_d;
  std::optional<double> toy_p, toy_n;
  std::optional<std::size_t> toy_t;
  toy->add_option("--d", toy_d, "Local dimension");
  toy->add_option("--p", toy_p, "Noise strength");
  toy->add_option("--t", toy_t, "Number of steps");
  toy->add_option("--n", toy_n, "Renyi index");

  CommonFlags cmp_flags;
  auto* compare = app.add_subcommand("compare", "Spin model vs twirl vs Monte Carlo");
  cmp_flags.attach(compare);
  bool cmp_oracle = false;
  std::optional<int> cmp_d;
  std::optional<std::string> cmp_p;
  std::optional<std::size_t> cmp_l, cmp_t, cmp_samples;
  compare->add_flag("--oracle", cmp_oracle, "Compare against the exact oracle (the only mode)");
  compare->add_option("--d", cmp_d, "Local dimension");
  compare->add_option("--p", cmp_p, "Noise strength (exact decimal or fraction)");
  compare->add_option("--L", cmp_l, "System size");
  compare->add_option("--t", cmp_t, "Maximum depth");
  compare->add_option("--samples", cmp_samples, "Monte Carlo samples");

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a figure dataset at desk scale");
  std::string figure;
  chanent::runner::ReproduceOptions repro;
  std::string repro_out = "reproduce";
  reproduce->add_option("--figure", figure, "Figure name")->required()->check(CLI::IsMember(chanent::runner::kFigures));
  reproduce->add_flag("--quick", repro.quick, "Smaller sizes for a fast smoke run");
  reproduce->add_option("--out", repro_out, "Output directory");
  reproduce->add_option("--workers", repro.workers, "Worker threads");
  reproduce->add_option("--seed", repro.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnostic(kExitConfig, "usage", e.what());
    return kExitConfig;
  }

  try {
    using chanent::runner::parse_config;
    if (simulate->parsed()) {
      context.command = "simulate";
      if (sim_flags.config_path.empty()) throw ConfigError("simulate needs --config");
      const auto config = parse_config(sim_flags.resolve(Json::object()));
      const auto report = chanent::runner::run_simulate(config, context);
      print_files(report);
      std::cout << report.summary.dump(2) << "\n";
    } else if (statmech->parsed()) {
      context.command = "statmech";
      (void)closed_forms;
      Json json{{"kind", "statmech"}, {"L", 64}, {"t_max", 10}, {"p", 0.1}, {"d", 2}, {"output", "out/statmech"}};
      json = stat_flags.resolve(json);
      if (stat_d) json["d"] = *stat_d;
      if (stat_p) json["p"] = *stat_p;
      if (stat_l) json["L"] = *stat_l;
      if (stat_t) json["t_max"] = *stat_t;
      const auto report = chanent::runner::run_statmech(parse_config(json), context);
      print_table(report.dir / "statmech.csv");
    } else if (oracle->parsed()) {
      context.command = "oracle";
      Json json{{"kind", "oracle_compare"}, {"L", 4}, {"t_max", 2}, {"p", 0.3}, {"d", 2},
                {"tops", {"bb", "ba", "ab"}}, {"output", "out/oracle"}};
      json = oracle_flags.resolve(json);
      if (oracle_d) json["d"] = *oracle_d;
      if (oracle_p) {
        json["p_exact"] = *oracle_p;
        json["p"] = chanent::to_double(chanent::parse_rational(*oracle_p));
      }
      if (oracle_l) json["L"] = *oracle_l;
      if (oracle_t) json["t_max"] = *oracle_t;
      const auto report = chanent::runner::run_oracle(parse_config(json), context);
      print_table(report.dir / "oracle.csv");
    } else if (toy->parsed()) {
      context.command = "toy";
      Json json{{"kind", "toy"}, {"t_max", 20}, {"p", 0.1}, {"d", 2}, {"output", "out/toy"}};
      json = toy_flags.resolve(json);
      if (toy_d) json["d"] = *toy_d;
      if (toy_p) json["p"] = *toy_p;
      if (toy_t) json["t_max"] = *toy_t;
      if (toy_n) json["renyi_n"] = *toy_n;
      const auto report = chanent::runner::run_toy(parse_config(json), context);
      print_table(report.dir / "toy.csv");
    } else if (compare->parsed()) {
      context.command = "compare";
      (void)cmp_oracle;
      Json json{{"kind", "oracle_compare"}, {"L", 4}, {"t_max", 2}, {"p", 0.3}, {"d", 2},
                {"samples", 10000}, {"base_seed", 7}, {"output", "out/compare"}};
      json = cmp_flags.resolve(json);
      if (cmp_d) json["d"] = *cmp_d;
      if (cmp_p) {
        json["p_exact"] = *cmp_p;
        json["p"] = chanent::to_double(chanent::parse_rational(*cmp_p));
      }
      if (cmp_l) json["L"] = *cmp_l;
      if (cmp_t) json["t_max"] = *cmp_t;
      if (cmp_samples) json["samples"] = *cmp_samples;
      const auto report = chanent::runner::run_compare(parse_config(json), context);
      print_table(report.dir / "compare.csv");
      std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
      if (!report.passed) return kExitFailedCheck;
    } else if (reproduce->parsed()) {
      repro.out_dir = repro_out;
      const auto report = chanent::runner::reproduce(figure, repro);
      print_files(report);
      std::cout << report.summary.dump(2) << "\n";
    }
  } catch (const ConfigError& e) {
    diagnostic(kExitConfig, "config", e.what());
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    diagnostic(kExitConfig, "config", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    diagnostic(kExitConfig, "config", e.what());
    return kExitConfig;
  } catch (const std::length_error& e) {
    diagnostic(kExitBudget, "budget", e.what());
    return kExitBudget;
  } catch (const std::exception& e) {
    diagnostic(1, "runtime", e.what());
    return 1;
  }
  return kExitOk;
}
