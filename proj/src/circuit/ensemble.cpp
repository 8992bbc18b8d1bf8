#include "chanent/circuit/ensemble.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "chanent/common/parallel.h"

namespace chanent::circuit {

const Series& EnsembleResult::find(const std::string& observable, const std::string& partition) const {
  for (const auto& s : series) {
    if (s.observable == observable && s.partition == partition) return s;
  }
  throw std::out_of_range("no series for " + observable + " " + partition);
}

namespace {

Series summarize(std::string observable, std::string partition,
                 const std::vector<TrajectoryRecord>& records,
                 const std::function<double(const TrajectoryRow&)>& value) {
  Series s{std::move(observable), std::move(partition), {}, {}};
  const std::size_t steps = records.front().rows.size();
  const double n = static_cast<double>(records.size());
  for (std::size_t i = 0; i < steps; ++i) {
    double sum = 0.0;
    for (const auto& rec : records) sum += value(rec.rows[i]);
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& rec : records) {
      const double dv = value(rec.rows[i]) - mean;
      ss += dv * dv;
    }
    s.mean.push_back(mean);
    s.stderr_.push_back(records.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0);
  }
  return s;
}

}  // namespace

EnsembleResult average_records(const std::vector<TrajectoryRecord>& records,
                               const std::vector<Partition>& partitions,
                               const ObservableSelection& obs) {
  if (records.empty()) throw std::invalid_argument("no trajectories to average");
  EnsembleResult out;
  out.n_traj = records.size();
  for (const auto& row : records.front().rows) out.times.push_back(row.t);
  out.series.push_back(summarize("S_total", "", records,
                                 [](const TrajectoryRow& r) { return double(r.s_total); }));
  for (std::size_t p = 0; p < partitions.size(); ++p) {
    const std::string& label = partitions[p].label;
    if (obs.mutual) {
      out.series.push_back(summarize("mutual", label, records,
                                     [p](const TrajectoryRow& r) { return double(r.mutual[p]); }));
    }
    if (obs.op_ee) {
      out.series.push_back(summarize("op_ee", label, records,
                                     [p](const TrajectoryRow& r) { return double(r.op_ee[p]); }));
    }
    if (obs.negativity) {
      out.series.push_back(summarize("negativity", label, records,
                                     [p](const TrajectoryRow& r) { return r.negativity[p]; }));
    }
  }
  return out;
}

EnsembleResult ensemble_average(const Architecture& arch, const NoiseModel& noise,
                                const std::vector<Partition>& partitions,
                                const EnsembleOptions& options,
                                std::vector<TrajectoryRecord>* records) {
  if (options.n_traj < 1) throw std::invalid_argument("n_traj must be at least 1");
  std::vector<TrajectoryRecord> results(options.n_traj);
  parallel_for(options.n_traj, options.workers, [&](std::size_t i) {
    results[i] = run_trajectory(arch, noise, partitions, options.trajectory, options.base_seed + i);
  });
  auto out = average_records(results, partitions, options.trajectory.observables);
  if (records) *records = std::move(results);
  return out;
}

}  // namespace chanent::circuit
