#include "chanent/stabilizer/clifford_gate.h"

#include <stdexcept>

#include "chanent/pauli/gf_matrix.h"

namespace chanent::stabilizer {

namespace {

constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 20;

bool is_hermitian_qubit_word(const PauliWord& w) {
  int xz = 0;
  for (std::size_t i = 0; i < w.size(); ++i) xz += w.x(i) * w.z(i);
  return (w.phase() - xz) % 2 == 0;
}

}  // namespace

std::uint32_t local_pattern(const PauliWord& local) {
  const std::size_t m = local.size();
  const std::uint32_t d = static_cast<std::uint32_t>(local.dim());
  std::uint32_t idx = 0;
  std::uint32_t place = 1;
  for (std::size_t j = 0; j < m; ++j, place *= d) idx += local.x(j) * place;
  for (std::size_t j = 0; j < m; ++j, place *= d) idx += local.z(j) * place;
  return idx;
}

PauliWord pattern_word(std::uint32_t pattern, std::size_t m, int d) {
  PauliWord w(m, d);
  std::vector<int> digits(2 * m);
  for (auto& digit : digits) {
    digit = static_cast<int>(pattern % static_cast<std::uint32_t>(d));
    pattern /= static_cast<std::uint32_t>(d);
  }
  for (std::size_t j = 0; j < m; ++j) w.set(j, digits[j], digits[m + j]);
  return w;
}

CliffordGate::CliffordGate(std::vector<PauliWord> x_images, std::vector<PauliWord> z_images)
    : x_images_(std::move(x_images)), z_images_(std::move(z_images)) {
  const std::size_t m = x_images_.size();
  if (m == 0 || z_images_.size() != m) throw std::invalid_argument("gate needs m X and m Z images");
  d_ = x_images_.front().dim();
  for (std::size_t j = 0; j < m; ++j) {
    for (const PauliWord* w : {&x_images_[j], &z_images_[j]}) {
      if (w->size() != m || w->dim() != d_) {
        throw std::invalid_argument("gate image has wrong size or dimension");
      }
      if (d_ == 2 && !is_hermitian_qubit_word(*w)) {
        throw std::invalid_argument("qubit gate image is not Hermitian");
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int xx = symplectic_form(x_images_[i], x_images_[j]);
      const int zz = symplectic_form(z_images_[i], z_images_[j]);
      const int xz = symplectic_form(x_images_[i], z_images_[j]);
      if (xx != 0 || zz != 0 || xz != (i == j ? 1 : 0)) {
        throw std::invalid_argument("gate images do not preserve the symplectic form");
      }
    }
  }
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < 2 * m; ++j) {
    count *= static_cast<std::uint64_t>(d_);
    if (count > kMaxTableEntries) break;
  }
  if (count <= kMaxTableEntries) {
    pattern_count_ = static_cast<std::uint32_t>(count);
    build_table();
  }
}

void CliffordGate::build_table() {
  const std::size_t m = arity();
  table_.resize(pattern_count_);
  for (std::uint32_t idx = 0; idx < pattern_count_; ++idx) {
    const PauliWord image = conjugate(pattern_word(idx, m, d_));
    table_[idx] = {local_pattern(image), static_cast<std::uint8_t>(image.phase())};
  }
}

PauliWord CliffordGate::conjugate(const PauliWord& local) const {
  const std::size_t m = arity();
  if (local.size() != m || local.dim() != d_) {
    throw std::invalid_argument("word does not match the gate's arity");
  }
  PauliWord out(m, d_);
  out.set_phase(local.phase());
  for (std::size_t j = 0; j < m; ++j) {
    if (local.x(j)) out *= x_images_[j].pow(local.x(j));
    if (local.z(j)) out *= z_images_[j].pow(local.z(j));
  }
  return out;
}

CliffordGate CliffordGate::identity(std::size_t m, int d) {
  std::vector<PauliWord> xs, zs;
  for (std::size_t j = 0; j < m; ++j) {
    xs.push_back(PauliWord::single(m, d, j, 1, 0));
    zs.push_back(PauliWord::single(m, d, j, 0, 1));
  }
  return CliffordGate(std::move(xs), std::move(zs));
}

CliffordGate CliffordGate::fourier(int d) {
  return CliffordGate({PauliWord::single(1, d, 0, 0, 1)}, {PauliWord::single(1, d, 0, -1, 0)});
}

CliffordGate CliffordGate::sum(int d) {
  PauliWord x0(2, d);
  x0.set(0, 1, 0);
  x0.set(1, 1, 0);
  PauliWord z1(2, d);
  z1.set(0, 0, -1);
  z1.set(1, 0, 1);
  return CliffordGate({x0, PauliWord::single(2, d, 1, 1, 0)},
                      {PauliWord::single(2, d, 0, 0, 1), z1});
}

CliffordGate CliffordGate::phase_s() {
  return CliffordGate({PauliWord::from_string("Y")}, {PauliWord::from_string("Z")});
}

CliffordGate CliffordGate::inverse() const {
  const std::size_t m = arity();
  // Columns of `a` are the symplectic vectors of the images of X_0..X_{m-1},
  // Z_0..Z_{m-1}; augmenting with the identity and reducing gives the inverse.
  pauli::GfMatrix a(2 * m, 4 * m, d_);
  for (std::size_t j = 0; j < 2 * m; ++j) {
    const PauliWord& img = j < m ? x_images_[j] : z_images_[j - m];
    for (std::size_t i = 0; i < m; ++i) {
      a.set(i, j, img.x(i));
      a.set(m + i, j, img.z(i));
    }
    a.set(j, 2 * m + j, 1);
  }
  const auto echelon = a.row_echelon();
  if (echelon.rank() < 2 * m || echelon.pivot_columns[2 * m - 1] != 2 * m - 1) {
    throw std::logic_error("gate action is not invertible");
  }
  std::vector<PauliWord> xs, zs;
  for (std::size_t target = 0; target < 2 * m; ++target) {
    // Preimage coordinates of basis vector `target` are column 2m+target of the inverse.
    PauliWord pre(m, d_);
    for (std::size_t i = 0; i < m; ++i) {
      pre.set(i, echelon.reduced.at(i, 2 * m + target), echelon.reduced.at(m + i, 2 * m + target));
    }
    const PauliWord image = conjugate(pre);
    pre.set_phase(-image.phase());
    (target < m ? xs : zs).push_back(pre);
  }
  return CliffordGate(std::move(xs), std::move(zs));
}

CliffordGate CliffordGate::then(const CliffordGate& next) const {
  if (next.arity() != arity() || next.dim() != d_) throw std::invalid_argument("gate mismatch");
  std::vector<PauliWord> xs, zs;
  for (std::size_t j = 0; j < arity(); ++j) {
    xs.push_back(next.conjugate(x_images_[j]));
    zs.push_back(next.conjugate(z_images_[j]));
  }
  return CliffordGate(std::move(xs), std::move(zs));
}

}  // namespace chanent::stabilizer
