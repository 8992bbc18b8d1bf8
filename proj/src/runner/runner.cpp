#include "chanent/runner/runner.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <stdexcept>

#include "chanent/circuit/ensemble.h"
#include "chanent/domainwall/domainwall.h"
#include "chanent/oracle/twirl.h"
#include "chanent/replica/lattice.h"
#include "chanent/runner/analysis.h"
#include "chanent/toy/toy_qudit.h"

#ifndef CHANENT_VERSION
#define CHANENT_VERSION "unknown"
#endif

namespace chanent::runner {

namespace fs = std::filesystem;

const char* code_version() { return CHANENT_VERSION; }

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("CSV row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::render() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(columns_);
  for (const auto& row : rows_) line(row);
  return out;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

using Tables = std::vector<std::pair<std::string, CsvTable>>;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

RunReport finish(const ExperimentConfig& config, const RunContext& context, const Tables& tables,
                 Json summary, Json units = Json::object()) {
  RunReport report;
  report.dir = config.output;
  fs::create_directories(report.dir);
  Json files = Json::array();
  for (const auto& [name, table] : tables) {
    const std::string file = name + ".csv";
    write_text(report.dir / file, table.render());
    report.files.push_back(file);
    files.push_back(file);
  }
  Json manifest;
  manifest["schema"] = kManifestSchema;
  manifest["csv_schema"] = kCsvSchema;
  manifest["code_version"] = code_version();
  manifest["generated_at"] = utc_timestamp();
  manifest["command"] = context.command;
  manifest["argv"] = context.argv;
  manifest["config"] = to_json(config);
  manifest["files"] = files;
  manifest["units"] = std::move(units);
  manifest["summary"] = summary;
  write_text(report.dir / "manifest.json", manifest.dump(2) + "\n");
  report.files.push_back("manifest.json");
  report.summary = std::move(summary);
  return report;
}

Rational exact_p(const ExperimentConfig& config) {
  return config.p_exact.empty() ? rational_from_double(config.p) : parse_rational(config.p_exact);
}

stabilizer::Region oracle_region(const ExperimentConfig& config) {
  if (config.partitions.empty()) return stabilizer::Region::range(config.L, 0, config.L / 2);
  const auto& part = config.partitions.front();
  if (part.explicit_sites()) return stabilizer::Region(config.L, part.sites);
  return stabilizer::Region::range(config.L, 0, part.prefix);
}

RunReport simulate_impl(const ExperimentConfig& config, const RunContext& context,
                        circuit::EnsembleResult* averaged) {
  if (config.kind != ExperimentKind::kClifford1D && config.kind != ExperimentKind::kClifford2D &&
      config.kind != ExperimentKind::kBoundaryOnly) {
    throw ConfigError("simulate needs a clifford1d, clifford2d or boundary_only config");
  }
  config.validate();
  const auto arch = config.architecture();
  const auto noise = config.noise();
  const auto partitions = config.circuit_partitions();

  circuit::EnsembleOptions options;
  options.trajectory.d = config.d;
  options.trajectory.t_max = config.t_max;
  options.trajectory.observables = config.observable_selection();
  options.n_traj = config.n_traj;
  options.base_seed = config.base_seed;
  options.workers = config.workers;
  std::vector<circuit::TrajectoryRecord> records;
  const auto result = circuit::ensemble_average(arch, noise, partitions, options, &records);

  const std::vector<std::string> columns{"t", "partition", "observable", "mean", "stderr", "n_traj"};
  std::map<std::string, CsvTable> by_observable;
  Json peaks = Json::object();
  for (const auto& series : result.series) {
    if (!config.wants(series.observable)) continue;
    auto [it, inserted] = by_observable.try_emplace(series.observable, columns);
    const std::string partition = series.partition.empty() ? "all" : series.partition;
    for (std::size_t i = 0; i < result.times.size(); ++i) {
      it->second.add_row({std::to_string(result.times[i]), partition, series.observable,
                          format_number(series.mean[i]), format_number(series.stderr_[i]),
                          std::to_string(result.n_traj)});
    }
    if (series.observable != "S_total") {
      const Peak peak = series_peak(result, series);
      peaks[series.observable][partition] = {{"t", peak.t}, {"mean", peak.mean}, {"stderr", peak.stderr_}};
    }
  }
  Tables tables;
  for (const char* name : {"S_total", "mutual", "op_ee", "negativity"}) {
    auto it = by_observable.find(name);
    if (it != by_observable.end()) tables.emplace_back(name, std::move(it->second));
  }

  Json summary;
  summary["n_traj"] = result.n_traj;
  summary["peaks"] = peaks;
  if (config.wants("mutual")) {
    std::size_t violations = 0;
    for (const auto& record : records) {
      for (std::size_t k = 0; k < partitions.size(); ++k) {
        if (!circuit::check_small_increment(record, partitions, k)) ++violations;
      }
    }
    summary["small_increment_violations"] = violations;
  }
  const Json units = {{"S_total", "dits"}, {"mutual", "dits"}, {"op_ee", "dits"}, {"negativity", "bits"}};
  if (averaged != nullptr) *averaged = result;
  return finish(config, context, tables, summary, units);
}

}  // namespace

RunReport run_simulate(const ExperimentConfig& config, const RunContext& context) {
  return simulate_impl(config, context, nullptr);
}

RunReport run_statmech(const ExperimentConfig& config, const RunContext& context) {
  if (config.kind != ExperimentKind::kStatmech) throw ConfigError("statmech needs a statmech config");
  config.validate();
  const double d = config.d, p = config.p;
  const std::size_t L = config.L, t = config.t_max;
  domainwall::WallParams params{d, p, L, t};

  CsvTable table({"quantity", "value", "unit"});
  auto add = [&table](const std::string& name, double value, const std::string& unit) {
    table.add_row({name, format_number(value), unit});
  };
  Json summary;
  if (p > 0.0 && p < 1.0) {
    const double t_star = domainwall::thermalization_time(d, p);
    add("t_star", t_star, "layers");
    summary["t_star"] = t_star;
  }
  if (p < 1.0) {
    add("log_z_bb_small_t", domainwall::log_z_bb_small_t(params), "nats");
    add("log_z_ab_small_t", domainwall::log_z_ab_small_t(params), "nats");
  }
  add("vertical_wall_log_weight", domainwall::vertical_wall_log_weight(d, false), "nats");
  add("vertical_wall_log_weight_d2", domainwall::vertical_wall_log_weight(d, true), "nats");
  if (p > 0.0) {
    add("log_z_bb_large_t", domainwall::log_z_bb_large_t(L, d, p), "nats");
    const Rational pe = exact_p(config);
    const Rational z_ba = domainwall::z_ba_large_t(L / 2, Rational(config.d), pe);
    add("log_z_ba_large_t", std::log(to_double(z_ba)), "nats");
    add("log_attached_w", domainwall::log_attached_w(L, d, p), "nats");
  }
  if (L % 4 == 0 && p > 0.0 && p < 1.0) {
    const double ratio = domainwall::area_law_ratio(L, t, d, p);
    add("area_law_ratio", ratio, "1");
    summary["area_law_ratio"] = ratio;
  }

  CsvTable small({"t", "I2_nats", "I2_dits", "I2_d2_corrected_nats", "op_ee_nats", "S2_total_nats"});
  if (p < 1.0) {
    const auto mi = domainwall::mutual_info_small_t(params, false);
    const auto mi_c = domainwall::mutual_info_small_t(params, true);
    const auto op = domainwall::op_ee_small_t(params, false);
    const auto s2 = domainwall::s2_total_small_t(params);
    for (std::size_t k = 0; k <= t; ++k) {
      small.add_row({std::to_string(k), format_number(mi[k]), format_number(mi[k] / std::log(d)),
                     format_number(mi_c[k]), format_number(op[k]), format_number(s2[k])});
    }
  }

  CsvTable large({"n", "log_u", "log_v", "log_v_prime"});
  if (p > 0.0) {
    const auto u = domainwall::log_hanging_u(L / 2, d, p);
    const auto v = domainwall::log_boundary_v(L / 2, d, p);
    for (std::size_t n = 0; n <= L / 2; ++n) {
      large.add_row({std::to_string(n), format_number(u[n]), format_number(v[n].first),
                     format_number(v[n].second)});
    }
  }

  CsvTable finite({"t", "log_u_half"});
  if (p > 0.0 && p < 1.0) {
    for (std::size_t k = 0; k <= t; ++k) {
      finite.add_row({std::to_string(k), format_number(domainwall::log_u_finite_t_single(L / 2, k, d, p))});
    }
  }
  Tables tables;
  tables.emplace_back("statmech", std::move(table));
  tables.emplace_back("small_t", std::move(small));
  tables.emplace_back("large_t", std::move(large));
  tables.emplace_back("finite_t", std::move(finite));
  return finish(config, context, tables, summary);
}

RunReport run_oracle(const ExperimentConfig& config, const RunContext& context) {
  if (config.kind != ExperimentKind::kOracleCompare) throw ConfigError("oracle needs an oracle_compare config");
  config.validate();
  const auto arch = circuit::Architecture::brickwork(config.L, config.periodic);
  const auto a = oracle_region(config);
  const Rational p = exact_p(config);
  CsvTable table({"t", "top", "value"});
  for (std::size_t t = 0; t <= config.t_max; ++t) {
    for (const auto& top : config.tops) {
      const double value = oracle::two_copy_twirl_average(arch, t, config.d, p, oracle::parse_top_boundary(top), a);
      table.add_row({std::to_string(t), top, format_number(value)});
    }
  }
  Tables tables;
  tables.emplace_back("oracle", std::move(table));
  return finish(config, context, tables, Json::object());
}

RunReport run_compare(const ExperimentConfig& config, const RunContext& context) {
  if (config.kind != ExperimentKind::kOracleCompare) throw ConfigError("compare needs an oracle_compare config");
  config.validate();
  const auto arch = circuit::Architecture::brickwork(config.L, config.periodic);
  const auto a = oracle_region(config);
  const Rational p = exact_p(config);
  const std::size_t samples = config.samples == 0 ? 10000 : config.samples;
  constexpr double kRelTol = 1e-10;
  constexpr double kSigmas = 3.0;
  // Some purities do not fluctuate at all (t = 1 blocks have a fixed spectrum);
  // there the sample spread is pure round-off.
  constexpr double kRoundoff = 1e-12;

  CsvTable table({"t", "top", "brute_force", "twirl", "mc_mean", "mc_stderr", "rel_delta_twirl",
                  "mc_sigma_vs_exact", "pass"});
  bool all_pass = true;
  const replica::Perm sw = replica::Perm::from_cycles(2, "(1,2)"), id(2);
  for (std::size_t t = 1; t <= config.t_max; ++t) {
    for (const auto& top_name : config.tops) {
      const auto top = oracle::parse_top_boundary(top_name);
      auto lattice = replica::SpinLattice::from_architecture(arch, t, 2);
      lattice.set_top(oracle::swap_region(top, a), sw, id);
      replica::EnumerationOptions enum_options;
      enum_options.workers = config.workers;
      const double exact = to_double(replica::brute_force_partition(
          lattice, replica::WeightKind::kDepolarizingExact, Rational(config.d), p, enum_options));
      const double twirl = oracle::two_copy_twirl_average(arch, t, config.d, p, top, a);
      oracle::MonteCarloOptions mc_options;
      mc_options.workers = config.workers;
      const auto mc = oracle::mc_replica_average(arch, t, config.d, to_double(p),
                                                 oracle::purity_observable(top, a), samples,
                                                 config.base_seed, mc_options);
      const double rel = std::abs(twirl - exact) / std::abs(exact);
      const double delta = std::abs(mc.mean - exact);
      const double sigma = mc.stderr_ > 0.0 ? delta / mc.stderr_ : (delta == 0.0 ? 0.0 : INFINITY);
      const bool pass = rel <= kRelTol && (sigma <= kSigmas || delta <= kRoundoff);
      all_pass = all_pass && pass;
      table.add_row({std::to_string(t), top_name, format_number(exact), format_number(twirl),
                     format_number(mc.mean), format_number(mc.stderr_), format_number(rel),
                     format_number(sigma), pass ? "pass" : "fail"});
    }
  }
  Json summary;
  summary["samples"] = samples;
  summary["rel_tolerance"] = kRelTol;
  summary["sigma_tolerance"] = kSigmas;
  summary["roundoff_tolerance"] = kRoundoff;
  summary["passed"] = all_pass;
  Tables tables;
  tables.emplace_back("compare", std::move(table));
  RunReport report = finish(config, context, tables, summary);
  report.passed = all_pass;
  return report;
}

RunReport run_toy(const ExperimentConfig& config, const RunContext& context) {
  if (config.kind != ExperimentKind::kToy) throw ConfigError("toy needs a toy config");
  config.validate();
  CsvTable table({"t", "renyi_channel", "vn_channel", "renyi_channel_large_d", "vn_channel_large_d",
                  "quenched", "annealed", "annealed_large_d"});
  for (std::size_t t = 0; t <= config.t_max; ++t) {
    const toy::ToyParams params{config.d, config.p, t, config.renyi_n};
    const auto traj = toy::trajectory_setup_entropies(params);
    const bool finite = config.p < 1.0;
    table.add_row({std::to_string(t), format_number(toy::renyi_channel_setup(params)),
                   format_number(toy::vn_channel_setup(params)),
                   finite ? format_number(toy::renyi_channel_setup_large_d(params)) : "-inf",
                   format_number(toy::vn_channel_setup_large_d(params)), format_number(traj.quenched),
                   format_number(traj.annealed), finite ? format_number(toy::annealed_large_d(params)) : "-inf"});
  }
  Tables tables;
  tables.emplace_back("toy", std::move(table));
  return finish(config, context, tables, Json::object(), {{"toy", "nats"}});
}

RunReport run(const ExperimentConfig& config, const RunContext& context) {
  switch (config.kind) {
    case ExperimentKind::kClifford1D:
    case ExperimentKind::kClifford2D:
    case ExperimentKind::kBoundaryOnly:
      return run_simulate(config, context);
    case ExperimentKind::kStatmech:
      return run_statmech(config, context);
    case ExperimentKind::kOracleCompare:
      return run_compare(config, context);
    case ExperimentKind::kToy:
      return run_toy(config, context);
  }
  throw ConfigError("unknown experiment kind");
}

// ---- figure reproduction ----------------------------------------------------

namespace {

std::string p_label(double p) { return "p" + format_number(p); }

ExperimentConfig base_sim(ExperimentKind kind, const ReproduceOptions& options) {
  ExperimentConfig c;
  c.kind = kind;
  c.workers = options.workers;
  c.base_seed = options.seed;
  return c;
}

// Runs a simulation and returns the averaged result alongside the files.
circuit::EnsembleResult simulate_series(const ExperimentConfig& config, RunReport& parent,
                                        const fs::path& parent_dir, const RunContext& context) {
  circuit::EnsembleResult result;
  simulate_impl(config, context, &result);
  parent.files.push_back(fs::relative(fs::path(config.output), parent_dir).string() + "/");
  return result;
}

void write_table(RunReport& report, const std::string& name, const CsvTable& table) {
  write_text(report.dir / (name + ".csv"), table.render());
  report.files.push_back(name + ".csv");
}

void write_figure_manifest(RunReport& report, const std::string& figure, const ReproduceOptions& options) {
  Json manifest;
  manifest["schema"] = kManifestSchema;
  manifest["csv_schema"] = kCsvSchema;
  manifest["code_version"] = code_version();
  manifest["generated_at"] = utc_timestamp();
  manifest["command"] = "reproduce";
  manifest["figure"] = figure;
  manifest["quick"] = options.quick;
  manifest["seed"] = options.seed;
  manifest["files"] = report.files;
  manifest["summary"] = report.summary;
  write_text(report.dir / "manifest.json", manifest.dump(2) + "\n");
  report.files.push_back("manifest.json");
}

// Peak of I(A:B) per partition across a sweep of p values.
void peak_table(RunReport& report, const ReproduceOptions& options, const RunContext& context,
                ExperimentKind kind, std::size_t L, const std::vector<double>& ps,
                const std::vector<std::size_t>& sizes, std::size_t t_max, std::size_t n_traj,
                const std::vector<std::string>& observables) {
  CsvTable peaks({"p", "partition", "A", "t_peak", "peak_mean", "peak_stderr"});
  for (double p : ps) {
    ExperimentConfig c = base_sim(kind, options);
    c.L = L;
    c.periodic = kind != ExperimentKind::kBoundaryOnly;
    c.p = p;
    c.t_max = t_max;
    c.n_traj = n_traj;
    c.observables = observables;
    for (std::size_t a : sizes) c.partitions.push_back({a, {}});
    c.output = (report.dir / p_label(p)).string();
    const auto result = simulate_series(c, report, report.dir, context);
    Json per_p = Json::object();
    for (std::size_t a : sizes) {
      const auto& series = result.find("mutual", "A=" + std::to_string(a));
      const Peak peak = series_peak(result, series);
      peaks.add_row({format_number(p), series.partition, std::to_string(a), std::to_string(peak.t),
                     format_number(peak.mean), format_number(peak.stderr_)});
      per_p[std::to_string(a)] = peak.mean;
    }
    report.summary["peaks"][p_label(p)] = per_p;
  }
  write_table(report, "peaks", peaks);
}

}  // namespace

RunReport reproduce(const std::string& figure, const ReproduceOptions& options) {
  RunReport report;
  report.dir = options.out_dir / figure;
  fs::create_directories(report.dir);
  const RunContext context{"reproduce " + figure, {}};
  const bool q = options.quick;

  if (figure == "fig3b") {
    // Mutual information curves for several noise strengths.
    const std::size_t L = q ? 32 : 128;
    peak_table(report, options, context, ExperimentKind::kClifford1D, L, {0.0, 0.01, 0.05, 0.1},
               {L / 4, L / 2}, q ? 32 : 128, q ? 8 : 100, {"S_total", "mutual"});
  } else if (figure == "fig3c") {
    // Peak of I(A:B) against |A| at fixed p: flat when the area law holds.
    const std::size_t L = q ? 64 : 256;
    const std::vector<std::size_t> sizes = q ? std::vector<std::size_t>{8, 16, 32}
                                             : std::vector<std::size_t>{16, 32, 64, 128};
    peak_table(report, options, context, ExperimentKind::kClifford1D, L, {0.05, 0.1}, sizes, q ? 32 : 64,
               q ? 8 : 100, {"mutual"});
    CsvTable spread({"p", "max_over_min"});
    for (const auto& [label, per_p] : report.summary["peaks"].items()) {
      double lo = INFINITY, hi = 0.0;
      for (const auto& [a, value] : per_p.items()) {
        lo = std::min(lo, value.get<double>());
        hi = std::max(hi, value.get<double>());
      }
      spread.add_row({label.substr(1), format_number(hi / lo)});
    }
    write_table(report, "spread", spread);
  } else if (figure == "fig3d") {
    // Log-negativity and operator entanglement next to the mutual information.
    const std::size_t L = q ? 16 : 64;
    peak_table(report, options, context, ExperimentKind::kClifford1D, L, {0.05, 0.1}, {L / 2}, q ? 16 : 64,
               q ? 8 : 100, {"mutual", "op_ee", "negativity"});
  } else if (figure == "fig4b") {
    // Boundary-only noise: I(A:B) curves.
    const std::size_t L = q ? 16 : 64;
    peak_table(report, options, context, ExperimentKind::kBoundaryOnly, L, {1.0}, {L / 8, L / 4, L / 2},
               q ? 48 : 256, q ? 4 : 50, {"S_total", "mutual"});
  } else if (figure == "fig4c") {
    // Boundary-only noise: peak against |A| with a linear fit.
    const std::size_t L = q ? 32 : 128;
    const std::vector<std::size_t> sizes = q ? std::vector<std::size_t>{4, 8, 12, 16}
                                             : std::vector<std::size_t>{8, 16, 32, 48, 64};
    peak_table(report, options, context, ExperimentKind::kBoundaryOnly, L, {1.0}, sizes, q ? 96 : 384,
               q ? 4 : 50, {"mutual"});
    std::vector<double> x, y;
    for (std::size_t a : sizes) {
      x.push_back(static_cast<double>(a));
      y.push_back(report.summary["peaks"][p_label(1.0)][std::to_string(a)].get<double>());
    }
    const LinearFit fit = linear_regression(x, y);
    CsvTable reg({"slope", "intercept", "r_squared"});
    reg.add_row({format_number(fit.slope), format_number(fit.intercept), format_number(fit.r_squared)});
    write_table(report, "regression", reg);
    report.summary["regression"] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
  } else if (figure == "sm_vn") {
    // Total entropy approach to L dits against t* = log d / (-log(1-p)).
    const std::size_t L = q ? 16 : 64;
    CsvTable therm({"d", "p", "t_star", "t_95", "ratio"});
    for (int d : {2, 3, 5}) {
      for (double p : {0.05, 0.1, 0.2}) {
        const double t_star = domainwall::thermalization_time(d, p);
        ExperimentConfig c = base_sim(ExperimentKind::kClifford1D, options);
        c.L = L;
        c.d = d;
        c.p = p;
        c.t_max = static_cast<std::size_t>(std::ceil(8.0 * t_star)) + 16;
        c.n_traj = q ? 4 : 20;
        c.observables = {"S_total"};
        c.output = (report.dir / ("d" + std::to_string(d) + "_" + p_label(p))).string();
        const auto result = simulate_series(c, report, report.dir, context);
        const auto t95 = first_crossing(result, result.find("S_total"), 0.95 * static_cast<double>(L));
        therm.add_row({std::to_string(d), format_number(p), format_number(t_star),
                       t95 ? std::to_string(*t95) : "nan",
                       t95 ? format_number(static_cast<double>(*t95) / t_star) : "nan"});
      }
    }
    write_table(report, "thermalization", therm);
  } else if (figure == "sm_2d") {
    // 2D plaquettes: peak across a half cut against the linear size.
    const std::vector<std::size_t> sizes = q ? std::vector<std::size_t>{4, 6} : std::vector<std::size_t>{4, 6, 8};
    CsvTable peaks({"L", "t_peak", "peak_mean", "peak_stderr"});
    std::vector<double> x, y;
    for (std::size_t L : sizes) {
      ExperimentConfig c = base_sim(ExperimentKind::kClifford2D, options);
      c.Lx = c.Ly = c.L = L;
      c.p = 0.1;
      c.t_max = q ? 60 : 300;
      c.n_traj = q ? 4 : 50;
      c.observables = {"mutual"};
      c.output = (report.dir / ("L" + std::to_string(L))).string();
      const auto result = simulate_series(c, report, report.dir, context);
      const Peak peak = series_peak(result, result.find("mutual", c.circuit_partitions().front().label));
      peaks.add_row({std::to_string(L), std::to_string(peak.t), format_number(peak.mean), format_number(peak.stderr_)});
      x.push_back(static_cast<double>(L));
      y.push_back(peak.mean);
    }
    write_table(report, "peaks", peaks);
    const LinearFit fit = linear_regression(x, y);
    report.summary["regression"] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
  } else if (figure == "toy") {
    for (int d : {2, 3}) {
      for (double p : {0.1, 0.5}) {
        ExperimentConfig c;
        c.kind = ExperimentKind::kToy;
        c.d = d;
        c.p = p;
        c.t_max = 20;
        c.output = (report.dir / ("d" + std::to_string(d) + "_" + p_label(p))).string();
        run_toy(c, context);
        report.files.push_back(fs::relative(fs::path(c.output), report.dir).string() + "/");
      }
    }
  } else {
    throw ConfigError("unknown figure '" + figure + "'");
  }
  write_figure_manifest(report, figure, options);
  return report;
}

}  // namespace chanent::runner
