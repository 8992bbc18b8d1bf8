#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chanent/circuit/architecture.h"
#include "chanent/stabilizer/mixed_state.h"
#include "chanent/stabilizer/region.h"

namespace chanent::circuit {

using stabilizer::Region;

// A bipartition to monitor. B defaults to the complement of A.
struct Partition {
  std::string label;
  Region a;
  Region b;

  static Partition complement_of(std::string label, Region a);
  static Partition prefix(std::size_t n, std::size_t size);
};

struct ObservableSelection {
  bool mutual = true;
  bool op_ee = false;
  bool negativity = false;  // qubits only
};

struct TrajectoryRow {
  std::size_t t = 0;
  long s_total = 0;
  std::vector<long> mutual;      // dits, per partition
  std::vector<long> op_ee;       // dits, per partition
  std::vector<double> negativity;  // bits, per partition
};

struct TrajectoryRecord {
  std::uint64_t seed = 0;
  Architecture arch;
  NoiseModel noise;
  int d = 2;
  // One row at t = 0 and one after every layer.
  std::vector<TrajectoryRow> rows;
};

struct TrajectoryOptions {
  int d = 2;
  std::size_t t_max = 1;
  ObservableSelection observables;
};

// Random substream purposes within one (layer, block) address.
enum class StreamPurpose : std::uint32_t { kGateCoin = 0, kGateSample = 1, kTraceCoin = 2, kBoundaryTrace = 3 };

// Applies layer `layer` (1-based) of the circuit drawn from stream `key`.
void apply_layer(stabilizer::MixedStabilizerState& state, const Architecture& arch,
                 const NoiseModel& noise, std::size_t layer, std::uint64_t key);

// Runs one trajectory from the product state. Deterministic in `seed`.
TrajectoryRecord run_trajectory(const Architecture& arch, const NoiseModel& noise,
                                const std::vector<Partition>& partitions,
                                const TrajectoryOptions& options, std::uint64_t seed);

// Observables of a state for the requested partitions.
TrajectoryRow measure(const stabilizer::MixedStabilizerState& state,
                      const std::vector<Partition>& partitions, const ObservableSelection& obs);

// Number of blocks in layer `layer` that touch both regions.
std::size_t crossing_blocks(const Architecture& arch, std::size_t layer, const Region& a,
                            const Region& b);

// Checks the per-layer growth bound on I(A:B) for partition `index`: a layer
// can raise I by at most 2 dits per site of every block straddling the cut
// (4 dits per two-site gate).
bool check_small_increment(const TrajectoryRecord& record, const std::vector<Partition>& partitions,
                           std::size_t index);

}  // namespace chanent::circuit
