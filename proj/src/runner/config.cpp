#include "chanent/runner/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "chanent/common/rational.h"

namespace chanent::runner {

namespace {

const std::set<std::string> kObservables{"S_total", "mutual", "op_ee", "negativity"};

template <class T>
T get_as(const Json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::size_t get_size(const Json& value, const std::string& key) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ConfigError("config key '" + key + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

double get_number(const Json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return value.get<double>();
}

PartitionSpec parse_partition(const Json& value) {
  PartitionSpec spec;
  if (value.is_number_integer()) {
    spec.prefix = get_size(value, "partitions");
    if (spec.prefix == 0) throw ConfigError("partition size must be positive");
  } else if (value.is_array()) {
    for (const auto& site : value) spec.sites.push_back(get_size(site, "partitions"));
    if (spec.sites.empty()) throw ConfigError("explicit partition must list at least one site");
    std::sort(spec.sites.begin(), spec.sites.end());
    if (std::adjacent_find(spec.sites.begin(), spec.sites.end()) != spec.sites.end()) {
      throw ConfigError("explicit partition repeats a site");
    }
  } else {
    throw ConfigError("partitions must be integers (prefix sizes) or site lists");
  }
  return spec;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kClifford1D:
      return "clifford1d";
    case ExperimentKind::kClifford2D:
      return "clifford2d";
    case ExperimentKind::kBoundaryOnly:
      return "boundary_only";
    case ExperimentKind::kStatmech:
      return "statmech";
    case ExperimentKind::kOracleCompare:
      return "oracle_compare";
    case ExperimentKind::kToy:
      return "toy";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(const std::string& text) {
  for (auto kind : {ExperimentKind::kClifford1D, ExperimentKind::kClifford2D, ExperimentKind::kBoundaryOnly,
                    ExperimentKind::kStatmech, ExperimentKind::kOracleCompare, ExperimentKind::kToy}) {
    if (to_string(kind) == text) return kind;
  }
  throw ConfigError("unknown experiment kind '" + text + "'");
}

std::string PartitionSpec::label() const {
  if (!explicit_sites()) return "A=" + std::to_string(prefix);
  std::string out = "A={";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(sites[i]);
  }
  return out + "}";
}

void ExperimentConfig::validate() const {
  if (d < 2) throw ConfigError("d must be at least 2");
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) throw ConfigError("d must be prime");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
  if (gate_prob > 1.0) throw ConfigError("gate_prob must lie in [0, 1]");
  if (trace_prob_scale > 1.0) throw ConfigError("trace_prob_scale must lie in [0, 1]");
  if (workers == 0) throw ConfigError("workers must be positive");
  for (const auto& obs : observables) {
    if (!kObservables.count(obs)) throw ConfigError("unknown observable '" + obs + "'");
  }
  if (wants("negativity") && d != 2) throw ConfigError("negativity is only available for d = 2");
  for (const auto& top : tops) {
    if (top != "bb" && top != "ba" && top != "ab") throw ConfigError("unknown top boundary '" + top + "'");
  }
  if (!(renyi_n > 1.0)) throw ConfigError("renyi_n must exceed 1");
  if (!p_exact.empty()) {
    try {
      const Rational exact = parse_rational(p_exact);
      if (exact < 0 || exact > 1) throw ConfigError("p_exact must lie in [0, 1]");
    } catch (const std::invalid_argument&) {
      throw ConfigError("p_exact is not a rational number");
    }
  }
  switch (kind) {
    case ExperimentKind::kClifford1D:
    case ExperimentKind::kClifford2D:
    case ExperimentKind::kBoundaryOnly: {
      if (t_max == 0) throw ConfigError("t_max must be at least 1");
      if (n_traj == 0) throw ConfigError("n_traj must be at least 1");
      try {
        architecture().validate();
        noise().validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      const std::size_t n = architecture().sites();
      for (const auto& part : partitions) {
        const std::size_t last = part.explicit_sites() ? part.sites.back() + 1 : part.prefix;
        if (last > n || (!part.explicit_sites() && part.prefix >= n)) {
          throw ConfigError("partition " + part.label() + " does not fit the system");
        }
      }
      break;
    }
    case ExperimentKind::kStatmech:
      if (L == 0 || L % 2 != 0) throw ConfigError("statmech needs an even L");
      break;
    case ExperimentKind::kOracleCompare:
      if (L == 0 || L % 2 != 0) throw ConfigError("oracle_compare needs an even L");
      break;
    case ExperimentKind::kToy:
      break;
  }
}

circuit::Architecture ExperimentConfig::architecture() const {
  switch (kind) {
    case ExperimentKind::kClifford2D:
      return circuit::Architecture::plaquette(Lx, Ly);
    case ExperimentKind::kBoundaryOnly:
      return circuit::Architecture::boundary_noise(L, circuit::parse_noisy_ends(noisy_ends));
    default:
      return circuit::Architecture::brickwork(L, periodic);
  }
}

circuit::NoiseModel ExperimentConfig::noise() const {
  auto noise = circuit::NoiseModel::defaults_for(architecture(), p);
  if (gate_prob >= 0.0) noise.gate_prob = gate_prob;
  if (trace_prob_scale >= 0.0) noise.trace_prob_scale = trace_prob_scale;
  return noise;
}

std::vector<circuit::Partition> ExperimentConfig::circuit_partitions() const {
  const auto arch = architecture();
  const std::size_t n = arch.sites();
  std::vector<circuit::Partition> out;
  if (partitions.empty()) {
    const auto half = arch.half_region();
    out.push_back(circuit::Partition::complement_of("A=" + std::to_string(half.size()),
                                                    stabilizer::Region(n, half)));
    return out;
  }
  for (const auto& part : partitions) {
    const stabilizer::Region a = part.explicit_sites() ? stabilizer::Region(n, part.sites)
                                                       : stabilizer::Region::range(n, 0, part.prefix);
    out.push_back(circuit::Partition::complement_of(part.label(), a));
  }
  return out;
}

circuit::ObservableSelection ExperimentConfig::observable_selection() const {
  circuit::ObservableSelection sel;
  sel.mutual = wants("mutual");
  sel.op_ee = wants("op_ee");
  sel.negativity = wants("negativity");
  return sel;
}

bool ExperimentConfig::wants(const std::string& observable) const {
  return std::find(observables.begin(), observables.end(), observable) != observables.end();
}

ExperimentConfig parse_config(const Json& json) {
  if (!json.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  if (!json.contains("kind")) throw ConfigError("config is missing 'kind'");
  for (const auto& [key, value] : json.items()) {
    if (key == "kind") {
      c.kind = parse_experiment_kind(get_as<std::string>(value, key));
    } else if (key == "name") {
      c.name = get_as<std::string>(value, key);
    } else if (key == "d") {
      c.d = static_cast<int>(get_size(value, key));
    } else if (key == "L") {
      c.L = get_size(value, key);
    } else if (key == "Lx") {
      c.Lx = get_size(value, key);
    } else if (key == "Ly") {
      c.Ly = get_size(value, key);
    } else if (key == "periodic") {
      c.periodic = get_as<bool>(value, key);
    } else if (key == "noisy_ends") {
      c.noisy_ends = get_as<std::string>(value, key);
    } else if (key == "p") {
      c.p = get_number(value, key);
    } else if (key == "gate_prob") {
      c.gate_prob = get_number(value, key);
    } else if (key == "trace_prob_scale") {
      c.trace_prob_scale = get_number(value, key);
    } else if (key == "partitions") {
      if (!value.is_array()) throw ConfigError("'partitions' must be a list");
      for (const auto& part : value) c.partitions.push_back(parse_partition(part));
    } else if (key == "t_max") {
      c.t_max = get_size(value, key);
    } else if (key == "n_traj") {
      c.n_traj = get_size(value, key);
    } else if (key == "base_seed") {
      c.base_seed = get_size(value, key);
    } else if (key == "output") {
      c.output = get_as<std::string>(value, key);
    } else if (key == "observables") {
      c.observables = get_as<std::vector<std::string>>(value, key);
    } else if (key == "workers") {
      c.workers = static_cast<unsigned>(get_size(value, key));
    } else if (key == "p_exact") {
      c.p_exact = get_as<std::string>(value, key);
    } else if (key == "samples") {
      c.samples = get_size(value, key);
    } else if (key == "tops") {
      c.tops = get_as<std::vector<std::string>>(value, key);
    } else if (key == "renyi_n") {
      c.renyi_n = get_number(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (c.kind == ExperimentKind::kClifford2D) {
    if (c.Lx == 0) c.Lx = c.L;
    if (c.Ly == 0) c.Ly = c.Lx;
  }
  try {
    circuit::parse_noisy_ends(c.noisy_ends);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

Json to_json(const ExperimentConfig& c) {
  Json out;
  out["kind"] = to_string(c.kind);
  out["name"] = c.name;
  out["d"] = c.d;
  out["L"] = c.L;
  if (c.kind == ExperimentKind::kClifford2D) {
    out["Lx"] = c.Lx;
    out["Ly"] = c.Ly;
  }
  out["periodic"] = c.periodic;
  out["noisy_ends"] = c.noisy_ends;
  out["p"] = c.p;
  if (c.gate_prob >= 0.0) out["gate_prob"] = c.gate_prob;
  if (c.trace_prob_scale >= 0.0) out["trace_prob_scale"] = c.trace_prob_scale;
  Json parts = Json::array();
  for (const auto& part : c.partitions) {
    if (part.explicit_sites()) {
      parts.push_back(part.sites);
    } else {
      parts.push_back(part.prefix);
    }
  }
  out["partitions"] = parts;
  out["t_max"] = c.t_max;
  out["n_traj"] = c.n_traj;
  out["base_seed"] = c.base_seed;
  out["output"] = c.output;
  out["observables"] = c.observables;
  out["workers"] = c.workers;
  if (!c.p_exact.empty()) out["p_exact"] = c.p_exact;
  out["samples"] = c.samples;
  out["tops"] = c.tops;
  out["renyi_n"] = c.renyi_n;
  return out;
}

void apply_override(Json& json, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override must look like key=value: " + assignment);
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  json[key] = value;
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json json = Json::parse(buffer.str(), nullptr, false, true);
  if (json.is_discarded()) throw ConfigError("config file " + path + " is not valid JSON");
  for (const auto& o : overrides) apply_override(json, o);
  return parse_config(json);
}

}  // namespace chanent::runner
