#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chanent::circuit {

enum class ArchitectureKind { kBrickwork1D, kPlaquette2D, kBoundaryNoise1D };
enum class NoisyEnds { kLeft, kRight, kBoth };

std::string to_string(ArchitectureKind kind);
std::string to_string(NoisyEnds ends);
ArchitectureKind parse_architecture_kind(const std::string& text);
NoisyEnds parse_noisy_ends(const std::string& text);

using Block = std::vector<std::size_t>;

// Circuit geometry. Layers are numbered from 1. In 1D, odd layers act on the
// bonds (0,1), (2,3), ... and even layers on (1,2), (3,4), ..., closing with
// (L-1,0) on a periodic chain. In 2D, sites are indexed y * Lx + x and odd
// (even) layers act on the 2x2 plaquettes anchored at even (odd) coordinates,
// periodic in both directions.
struct Architecture {
  ArchitectureKind kind = ArchitectureKind::kBrickwork1D;
  std::size_t L = 0;
  bool periodic = true;
  std::size_t Lx = 0;
  std::size_t Ly = 0;
  NoisyEnds noisy_ends = NoisyEnds::kBoth;

  static Architecture brickwork(std::size_t L, bool periodic = true);
  static Architecture plaquette(std::size_t Lx, std::size_t Ly);
  // Open chain with unitary bulk; trace channels act on the end bonds only.
  static Architecture boundary_noise(std::size_t L, NoisyEnds ends = NoisyEnds::kBoth);

  // Throws std::invalid_argument when the geometry is inconsistent.
  void validate() const;

  std::size_t sites() const;
  std::size_t arity() const { return kind == ArchitectureKind::kPlaquette2D ? 4 : 2; }

  // Gate blocks of layer `layer` (1-based).
  std::vector<Block> layer_blocks(std::size_t layer) const;
  // Blocks that carry the trace channel in the boundary-noise variant.
  std::vector<Block> boundary_blocks() const;

  // The half-system region used by default: [0, L/2) in 1D and the rows
  // y < Ly/2 in 2D (both are prefixes of the site order).
  std::vector<std::size_t> half_region() const;
};

// Probabilities controlling gates and trace channels.
struct NoiseModel {
  double p = 0.0;
  double gate_prob = 1.0;
  double trace_prob_scale = 1.0;

  // 2D plaquettes default to gate_prob = 0.1 and trace_prob_scale = 0.1.
  static NoiseModel defaults_for(const Architecture& arch, double p);
  void validate() const;
  double trace_prob() const { return p * trace_prob_scale; }
};

}  // namespace chanent::circuit
