#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chanent/circuit/architecture.h"
#include "chanent/common/rational.h"
#include "chanent/replica/perm.h"
#include "chanent/stabilizer/region.h"

namespace chanent::replica {

enum class BottomBoundary {
  kProductState,    // free: every input leg contributes 1
  kMaximallyMixed,  // each input leg contributes d^{-|g|}
};

enum class WeightKind { kDepolarizingExact, kProbabilisticExact, kLargeD };

std::string to_string(WeightKind kind);
WeightKind parse_weight_kind(const std::string& text);

// One gate block of the circuit carries one S_Q spin (its input side). Each
// output leg of the block meets either the spin of the next block on the same
// site or the fixed top boundary.
struct LatticeNode {
  std::size_t layer = 0;
  circuit::Block sites;
  // up[j] is the node index above sites[j], or nullopt for the top boundary.
  std::vector<std::optional<std::size_t>> up;
  // Number of input legs that meet the initial state directly.
  std::size_t bottom_legs = 0;
};

class SpinLattice {
 public:
  // Builds the lattice of `depth` layers for the given circuit geometry. Only
  // bulk-noise geometries (every block followed by its own channel) map onto
  // this lattice; the boundary-noise chain is rejected.
  static SpinLattice from_architecture(const circuit::Architecture& arch, std::size_t depth,
                                       std::size_t q);

  std::size_t q() const { return q_; }
  std::size_t sites() const { return sites_; }
  std::size_t depth() const { return depth_; }
  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  std::size_t free_spins() const { return nodes_.size(); }

  // Every site starts with the identity on top.
  void set_top(std::size_t site, const Perm& g);
  // Fixes `inside` above region a and `outside` elsewhere.
  void set_top(const stabilizer::Region& a, const Perm& inside, const Perm& outside);
  const Perm& top(std::size_t site) const { return top_.at(site); }

  BottomBoundary bottom() const { return bottom_; }
  void set_bottom(BottomBoundary bottom) { bottom_ = bottom; }

  // Sites never touched by a block within the depth.
  const std::vector<std::size_t>& idle_sites() const { return idle_; }

 private:
  std::size_t q_ = 0;
  std::size_t sites_ = 0;
  std::size_t depth_ = 0;
  std::vector<LatticeNode> nodes_;
  std::vector<Perm> top_;
  std::vector<std::size_t> idle_;
  BottomBoundary bottom_ = BottomBoundary::kProductState;
};

struct EnumerationOptions {
  double budget = 1e8;  // weight evaluations
  std::size_t workers = 1;
};

// Sum over all spin configurations of the product of block weights (upper
// spins already summed out). Throws std::length_error when the enumeration
// exceeds the budget. kLargeD is rejected here; use the double overload.
Rational brute_force_partition(const SpinLattice& lattice, WeightKind kind, const Rational& d,
                               const Rational& p, const EnumerationOptions& options = {});
double brute_force_partition_large_d(const SpinLattice& lattice, double d, double p,
                                     const EnumerationOptions& options = {});

// Same depolarizing partition function evaluated on the honeycomb form: both
// spins of every block are summed, with vertical bonds (1-p)^{Q-n} V_Q and
// zigzag bonds d^{-|g^-1 h|}.
Rational brute_force_honeycomb(const SpinLattice& lattice, const Rational& d, const Rational& p,
                               const EnumerationOptions& options = {});

}  // namespace chanent::replica
