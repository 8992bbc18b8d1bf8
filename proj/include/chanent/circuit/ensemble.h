#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chanent/circuit/trajectory.h"

namespace chanent::circuit {

// Mean and standard error (sample standard deviation / sqrt(n)) per time step.
struct Series {
  std::string observable;  // "S_total", "mutual", "op_ee" or "negativity"
  std::string partition;   // empty for S_total
  std::vector<double> mean;
  std::vector<double> stderr_;
};

struct EnsembleResult {
  std::vector<std::size_t> times;
  std::size_t n_traj = 0;
  std::vector<Series> series;

  const Series& find(const std::string& observable, const std::string& partition = "") const;
};

struct EnsembleOptions {
  TrajectoryOptions trajectory;
  std::size_t n_traj = 1;
  std::uint64_t base_seed = 0;
  unsigned workers = 1;
};

// Runs trajectories with seeds base_seed, ..., base_seed + n_traj - 1 and
// averages them. The reduction runs in trajectory order, so the result does
// not depend on the number of workers.
EnsembleResult ensemble_average(const Architecture& arch, const NoiseModel& noise,
                                const std::vector<Partition>& partitions,
                                const EnsembleOptions& options,
                                std::vector<TrajectoryRecord>* records = nullptr);

// Averages already computed records (all with identical shape).
EnsembleResult average_records(const std::vector<TrajectoryRecord>& records,
                               const std::vector<Partition>& partitions,
                               const ObservableSelection& obs);

}  // namespace chanent::circuit
