#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chanent/pauli/pauli_word.h"

namespace chanent::stabilizer {

using pauli::PauliWord;

// A Clifford unitary C on m qudits, stored as its conjugation action
// C X_j C^dag and C Z_j C^dag on the single-site generators. Global phase of C
// is not represented.
class CliffordGate {
 public:
  // Local Pauli patterns are indexed as sum_j x_j d^j + sum_j z_j d^(m+j).
  struct Entry {
    std::uint32_t pattern;
    std::uint8_t phase;
  };

  // Validates that the images preserve the symplectic form (and are Hermitian
  // for d = 2); throws std::invalid_argument otherwise.
  CliffordGate(std::vector<PauliWord> x_images, std::vector<PauliWord> z_images);

  static CliffordGate identity(std::size_t m, int d);
  // Discrete Fourier transform: X -> Z, Z -> X^{-1}. For d = 2 this is H.
  static CliffordGate fourier(int d);
  // SUM (CNOT for d = 2) with control 0 and target 1: X0 -> X0 X1, Z1 -> Z0^{-1} Z1.
  static CliffordGate sum(int d);
  // Qubit phase gate S: X -> Y, Z -> Z.
  static CliffordGate phase_s();

  std::size_t arity() const { return x_images_.size(); }
  int dim() const { return d_; }
  const PauliWord& x_image(std::size_t j) const { return x_images_[j]; }
  const PauliWord& z_image(std::size_t j) const { return z_images_[j]; }

  // C P C^dag for a word on the gate's m sites.
  PauliWord conjugate(const PauliWord& local) const;

  bool has_table() const { return !table_.empty(); }
  const Entry& lookup(std::uint32_t pattern) const { return table_[pattern]; }
  std::uint32_t pattern_count() const { return pattern_count_; }

  CliffordGate inverse() const;
  // The gate that applies *this first and then `next`.
  CliffordGate then(const CliffordGate& next) const;

  bool operator==(const CliffordGate& other) const {
    return x_images_ == other.x_images_ && z_images_ == other.z_images_;
  }

 private:
  void build_table();

  int d_;
  std::vector<PauliWord> x_images_;
  std::vector<PauliWord> z_images_;
  std::uint32_t pattern_count_ = 0;
  std::vector<Entry> table_;
};

// Encodes the pattern of a local word as used by CliffordGate::lookup.
std::uint32_t local_pattern(const PauliWord& local);
PauliWord pattern_word(std::uint32_t pattern, std::size_t m, int d);

}  // namespace chanent::stabilizer
