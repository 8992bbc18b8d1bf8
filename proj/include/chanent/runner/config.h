#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chanent/circuit/architecture.h"
#include "chanent/circuit/trajectory.h"

namespace chanent::runner {

using Json = nlohmann::ordered_json;

// Raised for malformed or inconsistent experiment configurations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind { kClifford1D, kClifford2D, kBoundaryOnly, kStatmech, kOracleCompare, kToy };
std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& text);

// A partition is either the prefix [0, size) or an explicit site list.
struct PartitionSpec {
  std::size_t prefix = 0;
  std::vector<std::size_t> sites;

  bool explicit_sites() const { return !sites.empty(); }
  std::string label() const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kClifford1D;
  std::string name = "experiment";
  int d = 2;

  // Geometry.
  std::size_t L = 16;
  std::size_t Lx = 0;
  std::size_t Ly = 0;
  bool periodic = true;
  std::string noisy_ends = "both";

  // Noise. Negative gate_prob / trace_prob_scale mean "architecture default".
  double p = 0.0;
  double gate_prob = -1.0;
  double trace_prob_scale = -1.0;

  std::vector<PartitionSpec> partitions;
  std::size_t t_max = 10;
  std::size_t n_traj = 1;
  std::uint64_t base_seed = 0;
  std::string output = "out";
  std::vector<std::string> observables{"S_total", "mutual"};
  unsigned workers = 1;

  // statmech / oracle_compare / toy extras.
  std::string p_exact;      // exact p for rational computations, e.g. "3/10"
  std::size_t samples = 0;  // Monte Carlo samples
  std::vector<std::string> tops{"bb", "ba"};
  double renyi_n = 2.0;

  // Throws ConfigError on inconsistent values.
  void validate() const;

  circuit::Architecture architecture() const;
  circuit::NoiseModel noise() const;
  std::vector<circuit::Partition> circuit_partitions() const;
  circuit::ObservableSelection observable_selection() const;
  bool wants(const std::string& observable) const;
};

// Parses a configuration object. Unknown keys and wrong types raise ConfigError.
ExperimentConfig parse_config(const Json& json);
Json to_json(const ExperimentConfig& config);

// Applies "key=value" overrides; the value is read as JSON when it parses and
// as a plain string otherwise.
void apply_override(Json& json, const std::string& assignment);

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

}  // namespace chanent::runner
