#include "chanent/circuit/architecture.h"

#include <stdexcept>

namespace chanent::circuit {

std::string to_string(ArchitectureKind kind) {
  switch (kind) {
    case ArchitectureKind::kBrickwork1D: return "brickwork1d";
    case ArchitectureKind::kPlaquette2D: return "plaquette2d";
    case ArchitectureKind::kBoundaryNoise1D: return "boundary_noise1d";
  }
  return "unknown";
}

std::string to_string(NoisyEnds ends) {
  switch (ends) {
    case NoisyEnds::kLeft: return "left";
    case NoisyEnds::kRight: return "right";
    case NoisyEnds::kBoth: return "both";
  }
  return "unknown";
}

ArchitectureKind parse_architecture_kind(const std::string& text) {
  if (text == "brickwork1d") return ArchitectureKind::kBrickwork1D;
  if (text == "plaquette2d") return ArchitectureKind::kPlaquette2D;
  if (text == "boundary_noise1d") return ArchitectureKind::kBoundaryNoise1D;
  throw std::invalid_argument("unknown architecture '" + text + "'");
}

NoisyEnds parse_noisy_ends(const std::string& text) {
  if (text == "left") return NoisyEnds::kLeft;
  if (text == "right") return NoisyEnds::kRight;
  if (text == "both") return NoisyEnds::kBoth;
  throw std::invalid_argument("noisy_ends must be left, right or both, got '" + text + "'");
}

Architecture Architecture::brickwork(std::size_t L, bool periodic) {
  Architecture a;
  a.kind = ArchitectureKind::kBrickwork1D;
  a.L = L;
  a.periodic = periodic;
  a.validate();
  return a;
}

Architecture Architecture::plaquette(std::size_t Lx, std::size_t Ly) {
  Architecture a;
  a.kind = ArchitectureKind::kPlaquette2D;
  a.Lx = Lx;
  a.Ly = Ly;
  a.periodic = true;
  a.validate();
  return a;
}

Architecture Architecture::boundary_noise(std::size_t L, NoisyEnds ends) {
  Architecture a;
  a.kind = ArchitectureKind::kBoundaryNoise1D;
  a.L = L;
  a.periodic = false;
  a.noisy_ends = ends;
  a.validate();
  return a;
}

void Architecture::validate() const {
  switch (kind) {
    case ArchitectureKind::kBrickwork1D:
    case ArchitectureKind::kBoundaryNoise1D:
      if (L < 2 || L % 2 != 0) throw std::invalid_argument("1D chains need an even L >= 2");
      if (kind == ArchitectureKind::kBoundaryNoise1D && periodic) {
        throw std::invalid_argument("the boundary-noise chain is open");
      }
      break;
    case ArchitectureKind::kPlaquette2D:
      if (Lx < 2 || Ly < 2 || Lx % 2 != 0 || Ly % 2 != 0) {
        throw std::invalid_argument("plaquette lattices need even Lx, Ly >= 2");
      }
      break;
  }
}

std::size_t Architecture::sites() const {
  return kind == ArchitectureKind::kPlaquette2D ? Lx * Ly : L;
}

std::vector<Block> Architecture::layer_blocks(std::size_t layer) const {
  if (layer == 0) throw std::invalid_argument("layers are numbered from 1");
  std::vector<Block> blocks;
  const bool odd = layer % 2 == 1;
  if (kind == ArchitectureKind::kPlaquette2D) {
    const std::size_t offset = odd ? 0 : 1;
    for (std::size_t j = 0; j < Ly / 2; ++j) {
      for (std::size_t i = 0; i < Lx / 2; ++i) {
        const std::size_t x0 = 2 * i + offset;
        const std::size_t y0 = 2 * j + offset;
        const std::size_t x1 = (x0 + 1) % Lx;
        const std::size_t y1 = (y0 + 1) % Ly;
        blocks.push_back({y0 * Lx + x0, y0 * Lx + x1, y1 * Lx + x0, y1 * Lx + x1});
      }
    }
    return blocks;
  }
  if (odd) {
    for (std::size_t i = 0; i + 1 < L; i += 2) blocks.push_back({i, i + 1});
  } else {
    for (std::size_t i = 1; i + 1 < L; i += 2) blocks.push_back({i, i + 1});
    if (periodic && L > 2) blocks.push_back({L - 1, 0});
  }
  return blocks;
}

std::vector<Block> Architecture::boundary_blocks() const {
  std::vector<Block> blocks;
  if (kind != ArchitectureKind::kBoundaryNoise1D) return blocks;
  if (noisy_ends != NoisyEnds::kRight) blocks.push_back({0, 1});
  if (noisy_ends != NoisyEnds::kLeft && (L > 2 || noisy_ends == NoisyEnds::kRight)) {
    blocks.push_back({L - 2, L - 1});
  }
  return blocks;
}

std::vector<std::size_t> Architecture::half_region() const {
  std::vector<std::size_t> sites_out;
  const std::size_t count = sites() / 2;
  for (std::size_t s = 0; s < count; ++s) sites_out.push_back(s);
  return sites_out;
}

NoiseModel NoiseModel::defaults_for(const Architecture& arch, double p) {
  NoiseModel noise;
  noise.p = p;
  if (arch.kind == ArchitectureKind::kPlaquette2D) {
    noise.gate_prob = 0.1;
    noise.trace_prob_scale = 0.1;
  }
  return noise;
}

void NoiseModel::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  };
  check(p, "p");
  check(gate_prob, "gate_prob");
  check(trace_prob_scale, "trace_prob_scale");
}

}  // namespace chanent::circuit
