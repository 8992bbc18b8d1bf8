#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chanent::pauli {

// A generalized Pauli operator on n prime-dimensional qudits,
//
//   P = w^phase * X^{x_1} Z^{z_1} (x) ... (x) X^{x_n} Z^{z_n},
//
// with X|j> = |j+1 mod d>, Z|j> = e^{2 pi i j / d} |j>. For d = 2 the phase
// unit is w = i and phases live mod 4 (so Y = i XZ has phase 1); for odd d the
// unit is w = e^{2 pi i / d} and phases live mod d.
class PauliWord {
 public:
  PauliWord() = default;
  // Identity on n sites.
  PauliWord(std::size_t n, int d);

  // Qubit word from Hermitian Pauli letters, e.g. "XIZY" or "-XX".
  static PauliWord from_string(std::string_view letters);
  // X^x Z^z on one site of an otherwise identity word.
  static PauliWord single(std::size_t n, int d, std::size_t site, int x, int z);

  std::size_t size() const { return x_.size(); }
  int dim() const { return d_; }
  std::uint8_t x(std::size_t site) const { return x_[site]; }
  std::uint8_t z(std::size_t site) const { return z_[site]; }
  std::span<const std::uint8_t> xs() const { return x_; }
  std::span<const std::uint8_t> zs() const { return z_; }
  void set(std::size_t site, int x, int z);

  int phase() const { return phase_; }
  void set_phase(int phase);
  int phase_modulus() const { return d_ == 2 ? 4 : d_; }

  bool is_identity() const;
  std::size_t weight() const;
  bool acts_on(std::size_t site) const { return x_[site] != 0 || z_[site] != 0; }

  PauliWord& operator*=(const PauliWord& rhs);
  friend PauliWord operator*(PauliWord lhs, const PauliWord& rhs) { return lhs *= rhs; }
  PauliWord pow(int exponent) const;

  // Keeps the given sites and replaces every other site by the identity.
  PauliWord restricted(std::span<const std::size_t> sites) const;

  bool operator==(const PauliWord& other) const = default;
  std::string to_string() const;

 private:
  int d_ = 2;
  int phase_ = 0;
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
};

// <p.x, q.z> - <p.z, q.x> mod d; zero iff p and q commute.
int symplectic_form(const PauliWord& p, const PauliWord& q);

// Phase units contributed by one commutation factor ZX = w^k XZ.
inline int commutation_phase_units(int d) { return d == 2 ? 2 : 1; }

}  // namespace chanent::pauli
