#include "chanent/oracle/dense_state.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chanent::oracle {

namespace {

constexpr std::size_t kMaxDenseDim = 1u << 12;

std::size_t int_pow(int base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

std::size_t checked_dim(std::size_t n, int d) {
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > kMaxDenseDim) throw std::length_error("dense state too large");
  }
  return dim;
}

// Full basis index for each (first, second) pair of digit strings, where the
// first string runs over `first` sites and the second over `second` sites.
struct Split {
  std::size_t first_dim = 1;
  std::size_t second_dim = 1;
  std::vector<std::size_t> index;  // index[f * second_dim + s]

  std::size_t at(std::size_t f, std::size_t s) const { return index[f * second_dim + s]; }
};

Split make_split(std::size_t n, int d, std::span<const std::size_t> first) {
  std::vector<bool> used(n, false);
  for (std::size_t s : first) {
    if (s >= n) throw std::out_of_range("site out of range");
    if (used[s]) throw std::invalid_argument("repeated site");
    used[s] = true;
  }
  std::vector<std::size_t> second;
  for (std::size_t s = 0; s < n; ++s) {
    if (!used[s]) second.push_back(s);
  }
  std::vector<std::size_t> power(n);
  for (std::size_t s = 0; s < n; ++s) power[s] = int_pow(d, s);

  auto place = [&](std::size_t value, const std::vector<std::size_t>& sites) {
    std::size_t full = 0;
    for (std::size_t s : sites) {
      full += (value % static_cast<std::size_t>(d)) * power[s];
      value /= static_cast<std::size_t>(d);
    }
    return full;
  };

  Split out;
  out.first_dim = int_pow(d, first.size());
  out.second_dim = int_pow(d, second.size());
  const std::vector<std::size_t> first_sites(first.begin(), first.end());
  std::vector<std::size_t> second_part(out.second_dim);
  for (std::size_t s = 0; s < out.second_dim; ++s) second_part[s] = place(s, second);
  out.index.resize(out.first_dim * out.second_dim);
  for (std::size_t f = 0; f < out.first_dim; ++f) {
    const std::size_t base = place(f, first_sites);
    for (std::size_t s = 0; s < out.second_dim; ++s) out.index[f * out.second_dim + s] = base + second_part[s];
  }
  return out;
}

void require_region(const DenseState& state, const Region& a) {
  if (a.system_size() != state.size()) throw std::invalid_argument("region size does not match the state");
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double power_sum(const Eigen::VectorXd& values, double n) {
  double sum = 0.0;
  for (double v : values) {
    if (v > 0.0) sum += std::pow(v, n);
  }
  return sum;
}

// w^phase, with w = i for qubits and e^{2 pi i / d} otherwise.
Complex phase_unit_power(int d, int phase) {
  const double unit = d == 2 ? std::numbers::pi / 2.0 : 2.0 * std::numbers::pi / d;
  return std::polar(1.0, unit * phase);
}

}  // namespace

DenseState DenseState::product_state(std::size_t n, int d) {
  const std::size_t dim = checked_dim(n, d);
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return DenseState(n, d, std::move(rho));
}

DenseState DenseState::maximally_mixed(std::size_t n, int d) {
  const std::size_t dim = checked_dim(n, d);
  Matrix rho = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DenseState(n, d, std::move(rho));
}

DenseState DenseState::from_matrix(std::size_t n, int d, Matrix rho) {
  const std::size_t dim = checked_dim(n, d);
  if (static_cast<std::size_t>(rho.rows()) != dim || static_cast<std::size_t>(rho.cols()) != dim) {
    throw std::invalid_argument("matrix shape does not match d^n");
  }
  DenseState out(n, d, std::move(rho));
  out.check_invariants();
  return out;
}

DenseState DenseState::from_stabilizer(const stabilizer::MixedStabilizerState& state) {
  const std::size_t n = state.size();
  const int d = state.dim();
  const std::size_t dim = checked_dim(n, d);
  Matrix rho = Matrix::Identity(dim, dim);
  for (const auto& g : state.generators()) {
    const Matrix gm = pauli_matrix(g);
    Matrix sum = Matrix::Identity(dim, dim);
    Matrix power = Matrix::Identity(dim, dim);
    for (int k = 1; k < d; ++k) {
      power = power * gm;
      sum += power;
    }
    rho = rho * sum;
  }
  rho /= static_cast<double>(dim);
  return DenseState(n, d, std::move(rho));
}

void DenseState::apply_unitary(const Matrix& u, std::span<const std::size_t> sites) {
  const Split split = make_split(n_, d_, sites);
  const auto block = static_cast<Eigen::Index>(split.first_dim);
  if (u.rows() != block || u.cols() != block) throw std::invalid_argument("unitary shape does not match the block");
  const Eigen::Index dim = rho_.rows();
  Eigen::VectorXcd v(block);
  // Left multiplication by (U on the block) column by column.
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < split.second_dim; ++r) {
      for (Eigen::Index b = 0; b < block; ++b) v(b) = rho_(split.at(b, r), c);
      const Eigen::VectorXcd w = u * v;
      for (Eigen::Index b = 0; b < block; ++b) rho_(split.at(b, r), c) = w(b);
    }
  }
  // Right multiplication by U^dag row by row.
  const Matrix u_dag = u.adjoint();
  Eigen::RowVectorXcd row(block);
  for (Eigen::Index rr = 0; rr < dim; ++rr) {
    for (std::size_t r = 0; r < split.second_dim; ++r) {
      for (Eigen::Index b = 0; b < block; ++b) row(b) = rho_(rr, split.at(b, r));
      const Eigen::RowVectorXcd w = row * u_dag;
      for (Eigen::Index b = 0; b < block; ++b) rho_(rr, split.at(b, r)) = w(b);
    }
  }
}

void DenseState::apply_trace(std::span<const std::size_t> sites) {
  const Split split = make_split(n_, d_, sites);
  const std::size_t block = split.first_dim, rest = split.second_dim;
  Matrix reduced = Matrix::Zero(rest, rest);
  for (std::size_t r1 = 0; r1 < rest; ++r1) {
    for (std::size_t r2 = 0; r2 < rest; ++r2) {
      Complex sum = 0.0;
      for (std::size_t b = 0; b < block; ++b) sum += rho_(split.at(b, r1), split.at(b, r2));
      reduced(r1, r2) = sum;
    }
  }
  rho_.setZero();
  const double norm = 1.0 / static_cast<double>(block);
  for (std::size_t r1 = 0; r1 < rest; ++r1) {
    for (std::size_t r2 = 0; r2 < rest; ++r2) {
      for (std::size_t b = 0; b < block; ++b) rho_(split.at(b, r1), split.at(b, r2)) = reduced(r1, r2) * norm;
    }
  }
}

void DenseState::apply_depolarizing(std::span<const std::size_t> sites, double p, const Matrix& u) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  DenseState traced = *this;
  traced.apply_trace(sites);
  apply_unitary(u, sites);
  rho_ = (1.0 - p) * rho_ + p * traced.rho_;
}

Matrix DenseState::reduced(const Region& keep) const {
  if (keep.system_size() != n_) throw std::invalid_argument("region size does not match the state");
  const Split split = make_split(n_, d_, keep.sites());
  const std::size_t kept = split.first_dim, traced = split.second_dim;
  Matrix out = Matrix::Zero(kept, kept);
  for (std::size_t a1 = 0; a1 < kept; ++a1) {
    for (std::size_t a2 = 0; a2 < kept; ++a2) {
      Complex sum = 0.0;
      for (std::size_t b = 0; b < traced; ++b) sum += rho_(split.at(a1, b), split.at(a2, b));
      out(a1, a2) = sum;
    }
  }
  return out;
}

double DenseState::purity() const { return (rho_ * rho_).trace().real(); }

void DenseState::check_invariants() const {
  constexpr double kTol = 1e-9;
  const Complex trace = rho_.trace();
  if (std::abs(trace - Complex(1.0)) > kTol) {
    throw std::logic_error("density matrix trace drifted to " + std::to_string(trace.real()));
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kTol) throw std::logic_error("density matrix is not Hermitian");
  if (hermitian_eigenvalues(rho_).minCoeff() < -kTol) throw std::logic_error("density matrix is not positive");
}

Matrix pauli_matrix(const pauli::PauliWord& word) {
  const std::size_t n = word.size();
  const int d = word.dim();
  const std::size_t dim = checked_dim(n, d);
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  const Complex scalar = phase_unit_power(d, word.phase());
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    // X^x Z^z |s> = omega^{z.s} |s + x>.
    std::size_t row = 0, rest = col, power = 1;
    int phase = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int s = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
      phase = (phase + word.z(j) * s) % d;
      row += static_cast<std::size_t>((s + word.x(j)) % d) * power;
      power *= static_cast<std::size_t>(d);
    }
    out(row, col) = scalar * std::pow(omega, phase);
  }
  return out;
}

Matrix clifford_unitary(const stabilizer::CliffordGate& gate) {
  const std::size_t m = gate.arity();
  const int d = gate.dim();
  const std::size_t dim = checked_dim(m, d);
  // Projector onto the joint +1 eigenspace of the Z images: the image of |0...0>.
  Matrix projector = Matrix::Identity(dim, dim);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix z = pauli_matrix(gate.z_image(j));
    Matrix sum = Matrix::Identity(dim, dim);
    Matrix power = Matrix::Identity(dim, dim);
    for (int k = 1; k < d; ++k) {
      power = power * z;
      sum += power;
    }
    projector = projector * sum / static_cast<double>(d);
  }
  Eigen::Index best = 0;
  projector.colwise().norm().maxCoeff(&best);
  const Eigen::VectorXcd psi = projector.col(best).normalized();

  std::vector<Matrix> x_images;
  for (std::size_t j = 0; j < m; ++j) x_images.push_back(pauli_matrix(gate.x_image(j)));
  Matrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Eigen::VectorXcd v = psi;
    std::size_t rest = col;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t reps = rest % static_cast<std::size_t>(d);
      rest /= static_cast<std::size_t>(d);
      for (std::size_t k = 0; k < reps; ++k) v = x_images[j] * v;
    }
    u.col(static_cast<Eigen::Index>(col)) = v;
  }
  return u;
}

Matrix haar_unitary(std::size_t dim, CounterRng& rng) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  const double scale = 1.0 / std::sqrt(2.0);
  Matrix z(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(r, c) = Complex(re, im) * scale;
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  for (std::size_t i = 0; i < dim; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

double renyi_entropy(const Matrix& rho, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("Renyi index must be positive");
  const Eigen::VectorXd values = hermitian_eigenvalues(rho);
  if (n == 1.0) {
    double s = 0.0;
    for (double v : values) {
      if (v > 0.0) s -= v * std::log(v);
    }
    return s;
  }
  return std::log(power_sum(values, n)) / (1.0 - n);
}

double renyi_mutual(const DenseState& state, const Region& a, const Region& b, double n) {
  require_region(state, a);
  require_region(state, b);
  if (a.overlaps(b)) throw std::invalid_argument("regions must be disjoint");
  return renyi_entropy(state.reduced(a), n) + renyi_entropy(state.reduced(b), n) -
         renyi_entropy(state.reduced(a.united(b)), n);
}

double op_ee(const DenseState& state, const Region& a, double n) {
  require_region(state, a);
  const int d = state.dim();
  const Split split = make_split(state.size(), d, a.sites());
  const std::size_t da = split.first_dim, db = split.second_dim;
  // Reshape rho((a,b),(a',b')) into M[(a,a'),(b,b')]; tr_B |rho><rho| = M M^dag.
  const Matrix& rho = state.matrix();
  Matrix m(da * da, db * db);
  for (std::size_t a1 = 0; a1 < da; ++a1) {
    for (std::size_t a2 = 0; a2 < da; ++a2) {
      for (std::size_t b1 = 0; b1 < db; ++b1) {
        for (std::size_t b2 = 0; b2 < db; ++b2) {
          m(a1 * da + a2, b1 * db + b2) = rho(split.at(a1, b1), split.at(a2, b2));
        }
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  Eigen::VectorXd weights = svd.singularValues().array().square();
  weights /= weights.sum();
  return renyi_entropy(Matrix(weights.cast<Complex>().asDiagonal()), n);
}

Matrix partial_transpose(const DenseState& state, const Region& a) {
  require_region(state, a);
  const Split split = make_split(state.size(), state.dim(), a.sites());
  const Matrix& rho = state.matrix();
  Matrix out(rho.rows(), rho.cols());
  for (std::size_t a1 = 0; a1 < split.first_dim; ++a1) {
    for (std::size_t a2 = 0; a2 < split.first_dim; ++a2) {
      for (std::size_t b1 = 0; b1 < split.second_dim; ++b1) {
        for (std::size_t b2 = 0; b2 < split.second_dim; ++b2) {
          out(split.at(a1, b1), split.at(a2, b2)) = rho(split.at(a2, b1), split.at(a1, b2));
        }
      }
    }
  }
  return out;
}

double log_negativity(const DenseState& state, const Region& a) {
  return std::log(hermitian_eigenvalues(partial_transpose(state, a)).cwiseAbs().sum());
}

double renyi_negativity(const DenseState& state, const Region& a, int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("Renyi negativity needs an even index");
  const Eigen::VectorXd gamma = hermitian_eigenvalues(partial_transpose(state, a));
  double moment = 0.0;
  for (double v : gamma) moment += std::pow(v, n);
  const double purity_n = power_sum(hermitian_eigenvalues(state.matrix()), n);
  return -std::log(moment) + std::log(purity_n);
}

}  // namespace chanent::oracle
