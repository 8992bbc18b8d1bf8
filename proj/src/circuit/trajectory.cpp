#include "chanent/circuit/trajectory.h"

#include <optional>
#include <stdexcept>

#include "chanent/circuit/clifford_sampler.h"
#include "chanent/common/rng.h"

namespace chanent::circuit {

using stabilizer::MixedStabilizerState;

Partition Partition::complement_of(std::string label, Region a) {
  Region b = a.complement();
  return Partition{std::move(label), std::move(a), std::move(b)};
}

Partition Partition::prefix(std::size_t n, std::size_t size) {
  return complement_of("A=" + std::to_string(size), Region::range(n, 0, size));
}

namespace {

bool is_prefix_cut(const Partition& part) {
  return part.a.prefix_length() >= 0 && part.b == part.a.complement();
}

CounterRng substream(std::uint64_t key, std::size_t layer, std::size_t block, StreamPurpose purpose) {
  return CounterRng(key, static_cast<std::uint32_t>(layer), static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(purpose));
}

}  // namespace

void apply_layer(MixedStabilizerState& state, const Architecture& arch, const NoiseModel& noise,
                 std::size_t layer, std::uint64_t key) {
  const bool bulk_noise = arch.kind != ArchitectureKind::kBoundaryNoise1D;
  const auto blocks = arch.layer_blocks(layer);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    bool gate = noise.gate_prob >= 1.0;
    if (!gate && noise.gate_prob > 0.0) {
      auto coin = substream(key, layer, b, StreamPurpose::kGateCoin);
      gate = coin.bernoulli(noise.gate_prob);
    }
    if (gate) {
      auto rng = substream(key, layer, b, StreamPurpose::kGateSample);
      state.apply(sample_random_clifford(state.dim(), blocks[b].size(), rng), blocks[b]);
    }
    if (bulk_noise && noise.trace_prob() > 0.0) {
      auto coin = substream(key, layer, b, StreamPurpose::kTraceCoin);
      if (coin.bernoulli(noise.trace_prob())) state.apply_trace(blocks[b]);
    }
  }
  if (!bulk_noise && noise.trace_prob() > 0.0) {
    const auto ends = arch.boundary_blocks();
    for (std::size_t e = 0; e < ends.size(); ++e) {
      auto coin = substream(key, layer, e, StreamPurpose::kBoundaryTrace);
      if (coin.bernoulli(noise.trace_prob())) state.apply_trace(ends[e]);
    }
  }
}

TrajectoryRow measure(const MixedStabilizerState& state, const std::vector<Partition>& partitions,
                      const ObservableSelection& obs) {
  TrajectoryRow row;
  row.s_total = state.total_entropy_dits();
  std::optional<stabilizer::CutProfile> profile;
  for (const auto& part : partitions) {
    long mutual = 0;
    long op = 0;
    if (obs.mutual || obs.op_ee) {
      if (is_prefix_cut(part)) {
        if (!profile) profile = state.cut_profile();
        mutual = profile->cut_mutual_information(static_cast<std::size_t>(part.a.prefix_length()));
        op = mutual;
      } else {
        if (obs.mutual) mutual = state.mutual_information_dits(part.a, part.b);
        if (obs.op_ee) op = state.operator_entanglement_dits(part.a);
      }
    }
    if (obs.mutual) row.mutual.push_back(mutual);
    if (obs.op_ee) row.op_ee.push_back(op);
    if (obs.negativity) row.negativity.push_back(state.log_negativity_bits(part.a));
  }
  return row;
}

TrajectoryRecord run_trajectory(const Architecture& arch, const NoiseModel& noise,
                                const std::vector<Partition>& partitions,
                                const TrajectoryOptions& options, std::uint64_t seed) {
  arch.validate();
  noise.validate();
  if (options.t_max < 1) throw std::invalid_argument("t_max must be at least 1");
  if (options.observables.negativity && options.d != 2) {
    throw std::invalid_argument("negativity is only available for qubits");
  }
  for (const auto& part : partitions) {
    if (part.a.system_size() != arch.sites() || part.b.system_size() != arch.sites()) {
      throw std::invalid_argument("partition '" + part.label + "' does not match the architecture");
    }
    if (part.a.overlaps(part.b)) {
      throw std::invalid_argument("partition '" + part.label + "' has overlapping regions");
    }
  }
  TrajectoryRecord record;
  record.seed = seed;
  record.arch = arch;
  record.noise = noise;
  record.d = options.d;
  const std::uint64_t key = derive_stream_key(seed, 0);
  auto state = MixedStabilizerState::product_state(arch.sites(), options.d);
  record.rows.push_back(measure(state, partitions, options.observables));
  for (std::size_t layer = 1; layer <= options.t_max; ++layer) {
    apply_layer(state, arch, noise, layer, key);
    auto row = measure(state, partitions, options.observables);
    row.t = layer;
    record.rows.push_back(std::move(row));
  }
  return record;
}

std::size_t crossing_blocks(const Architecture& arch, std::size_t layer, const Region& a,
                            const Region& b) {
  std::size_t count = 0;
  for (const auto& block : arch.layer_blocks(layer)) {
    bool in_a = false;
    bool in_b = false;
    for (std::size_t s : block) {
      in_a = in_a || a.contains(s);
      in_b = in_b || b.contains(s);
    }
    if (in_a && in_b) ++count;
  }
  return count;
}

bool check_small_increment(const TrajectoryRecord& record, const std::vector<Partition>& partitions,
                           std::size_t index) {
  if (index >= partitions.size()) throw std::out_of_range("partition index out of range");
  const auto& part = partitions[index];
  for (std::size_t r = 1; r < record.rows.size(); ++r) {
    const auto& prev = record.rows[r - 1];
    const auto& cur = record.rows[r];
    if (index >= cur.mutual.size()) throw std::invalid_argument("record lacks mutual information");
    long bound = 0;
    for (const auto& block : record.arch.layer_blocks(cur.t)) {
      bool in_a = false;
      bool in_b = false;
      for (std::size_t s : block) {
        in_a = in_a || part.a.contains(s);
        in_b = in_b || part.b.contains(s);
      }
      if (in_a && in_b) bound += 2 * static_cast<long>(block.size());
    }
    if (cur.mutual[index] - prev.mutual[index] > bound) return false;
  }
  return true;
}

}  // namespace chanent::circuit
