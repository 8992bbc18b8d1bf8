#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "chanent/pauli/pauli_word.h"
#include "chanent/stabilizer/clifford_gate.h"
#include "chanent/stabilizer/region.h"

namespace chanent::stabilizer {

// Dimensions of the subgroups supported on every prefix [0, a) and every
// suffix [a, n), computed from one pair of echelon passes. With them the
// entropy of every contiguous cut costs O(1).
struct CutProfile {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<long> prefix_dim;  // size n + 1
  std::vector<long> suffix_dim;  // size n + 1

  long prefix_entropy(std::size_t a) const { return static_cast<long>(a) - prefix_dim[a]; }
  long suffix_entropy(std::size_t a) const {
    return static_cast<long>(n - a) - suffix_dim[a];
  }
  // I([0,a) : [a,n)) in dits.
  long cut_mutual_information(std::size_t a) const {
    return prefix_entropy(a) + suffix_entropy(a) - static_cast<long>(n - k);
  }
};

// A mixed stabilizer state on n prime-d qudits, represented by k <= n
// independent commuting generators. Qubits use a bit-packed tableau; odd d uses
// one byte per exponent.
class MixedStabilizerState {
 public:
  // |0...0>, stabilized by Z_1, ..., Z_n.
  static MixedStabilizerState product_state(std::size_t n, int d);
  // I / d^n, no generators.
  static MixedStabilizerState maximally_mixed(std::size_t n, int d);
  // Validates commutation and independence.
  static MixedStabilizerState from_generators(std::span<const PauliWord> gens);

  MixedStabilizerState(const MixedStabilizerState& other);
  MixedStabilizerState(MixedStabilizerState&&) noexcept;
  MixedStabilizerState& operator=(const MixedStabilizerState& other);
  MixedStabilizerState& operator=(MixedStabilizerState&&) noexcept;
  ~MixedStabilizerState();

  std::size_t size() const { return n_; }
  int dim() const { return d_; }
  // Number of generators k.
  std::size_t rank() const;
  std::vector<PauliWord> generators() const;

  void apply(const CliffordGate& gate, std::span<const std::size_t> sites);
  // Replaces the state on `sites` by the maximally mixed state: keeps exactly
  // the stabilizer elements acting as the identity on `sites`.
  void apply_trace(std::span<const std::size_t> sites);

  long total_entropy_dits() const { return static_cast<long>(n_) - static_cast<long>(rank()); }
  long entropy_dits(const Region& a) const;
  long mutual_information_dits(const Region& a, const Region& b) const;
  // For stabilizer states the operator entanglement across A|A^c equals I(A:A^c).
  long operator_entanglement_dits(const Region& a) const;
  // Qubits only; throws std::domain_error for d != 2.
  double log_negativity_bits(const Region& a) const;

  CutProfile cut_profile() const;

  // Throws std::logic_error if the generators fail to commute, are dependent,
  // or exceed n.
  void check_invariants() const;

 private:
  struct Tableau;
  MixedStabilizerState(std::size_t n, int d, std::unique_ptr<Tableau> tableau);
  void require_region(const Region& a) const;

  std::size_t n_ = 0;
  int d_ = 2;
  std::unique_ptr<Tableau> tableau_;
};

}  // namespace chanent::stabilizer
