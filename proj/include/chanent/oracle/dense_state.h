#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "chanent/common/rng.h"
#include "chanent/pauli/pauli_word.h"
#include "chanent/stabilizer/clifford_gate.h"
#include "chanent/stabilizer/mixed_state.h"
#include "chanent/stabilizer/region.h"

namespace chanent::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using stabilizer::Region;

// Dense density matrix of L qudits. Basis index = sum_j s_j d^j, so site j is
// tensor digit j, matching the Pauli word convention.
class DenseState {
 public:
  static DenseState product_state(std::size_t n, int d);  // |0...0>
  static DenseState maximally_mixed(std::size_t n, int d);
  static DenseState from_matrix(std::size_t n, int d, Matrix rho);
  // Density matrix of a stabilizer state: d^-n prod_g sum_k g^k.
  static DenseState from_stabilizer(const stabilizer::MixedStabilizerState& state);

  std::size_t size() const { return n_; }
  int dim() const { return d_; }
  const Matrix& matrix() const { return rho_; }

  // rho -> U rho U^dag with U acting on `sites` (first site = lowest digit of U).
  void apply_unitary(const Matrix& u, std::span<const std::size_t> sites);
  // rho -> tr_S(rho) (x) I_S / d^|S|.
  void apply_trace(std::span<const std::size_t> sites);
  // rho -> (1-p) U rho U^dag + p tr_S(rho) (x) I_S / d^|S|.
  void apply_depolarizing(std::span<const std::size_t> sites, double p, const Matrix& u);

  // Reduced density matrix on the given region (digits in increasing site order).
  Matrix reduced(const Region& keep) const;
  double purity() const;

  // Throws std::logic_error if trace, Hermiticity or positivity drift.
  void check_invariants() const;

 private:
  DenseState(std::size_t n, int d, Matrix rho) : n_(n), d_(d), rho_(std::move(rho)) {}

  std::size_t n_ = 0;
  int d_ = 2;
  Matrix rho_;
};

// Matrix of a Pauli word, w^phase X^x Z^z with X|j> = |j+1>, Z|j> = omega^j |j>.
Matrix pauli_matrix(const pauli::PauliWord& word);

// A unitary whose conjugation action matches the Clifford table (unique up to
// a global phase).
Matrix clifford_unitary(const stabilizer::CliffordGate& gate);

// Haar random unitary: QR of a complex Gaussian matrix with the phases of R's
// diagonal folded back into Q.
Matrix haar_unitary(std::size_t dim, CounterRng& rng);

// ---- measures (natural logarithms) -----------------------------------------

double renyi_entropy(const Matrix& rho, double n);  // n == 1 gives von Neumann
double renyi_mutual(const DenseState& state, const Region& a, const Region& b, double n);
// Operator entanglement of rho between a and its complement.
double op_ee(const DenseState& state, const Region& a, double n);
double log_negativity(const DenseState& state, const Region& a);
// -log tr[(rho^T_A)^n] + log tr[rho^n]; n must be an even integer.
double renyi_negativity(const DenseState& state, const Region& a, int n);
Matrix partial_transpose(const DenseState& state, const Region& a);

}  // namespace chanent::oracle
