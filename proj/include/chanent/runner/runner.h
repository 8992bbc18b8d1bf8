#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "chanent/runner/config.h"

namespace chanent::runner {

inline constexpr const char* kCsvSchema = "chanent.csv.v1";
inline constexpr const char* kManifestSchema = "chanent.manifest.v1";

const char* code_version();

// A CSV table with a header row. Cells are written verbatim, so callers must
// not put commas or newlines in them.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string render() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// Deterministic text form of a double (%.12g).
std::string format_number(double value);

struct RunReport {
  std::filesystem::path dir;
  std::vector<std::string> files;  // relative to dir
  Json summary = Json::object();
  bool passed = true;              // false when a comparison check failed
};

struct RunContext {
  std::string command = "run";
  std::vector<std::string> argv;
};

// Each run writes its CSV files and a manifest.json into config.output.
RunReport run_simulate(const ExperimentConfig& config, const RunContext& context = {});
RunReport run_statmech(const ExperimentConfig& config, const RunContext& context = {});
RunReport run_oracle(const ExperimentConfig& config, const RunContext& context = {});
RunReport run_compare(const ExperimentConfig& config, const RunContext& context = {});
RunReport run_toy(const ExperimentConfig& config, const RunContext& context = {});

// Dispatches on config.kind (oracle_compare runs the three-way comparison).
RunReport run(const ExperimentConfig& config, const RunContext& context = {});

inline const std::vector<std::string> kFigures{"fig3b", "fig3c", "fig3d", "fig4b", "fig4c", "sm_vn", "sm_2d", "toy"};

struct ReproduceOptions {
  std::filesystem::path out_dir = "reproduce";
  bool quick = false;  // shrink sizes and trajectory counts for smoke runs
  unsigned workers = 1;
  std::uint64_t seed = 1;
};

// Generates the dataset behind one figure at desk scale; see README for the grids.
RunReport reproduce(const std::string& figure, const ReproduceOptions& options);

}  // namespace chanent::runner
