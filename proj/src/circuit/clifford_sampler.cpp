#include "chanent/circuit/clifford_sampler.h"

#include <stdexcept>

#include "chanent/pauli/gf.h"

namespace chanent::circuit {

namespace {

using Vec = std::vector<int>;

int omega(const Vec& u, const Vec& v, std::size_t m, int d) {
  long long acc = 0;
  for (std::size_t i = 0; i < m; ++i) acc += u[i] * v[m + i] - u[m + i] * v[i];
  acc %= d;
  return static_cast<int>(acc < 0 ? acc + d : acc);
}

Vec random_vector(std::size_t m, int d, CounterRng& rng) {
  Vec v(2 * m);
  for (auto& e : v) e = static_cast<int>(rng.below(static_cast<std::uint32_t>(d)));
  return v;
}

// Projects u onto the symplectic complement of span{(v_i, w_i)}.
void project(Vec& u, const std::vector<Vec>& vs, const std::vector<Vec>& ws, std::size_t m, int d) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int a = omega(u, ws[i], m, d);
    const int b = omega(u, vs[i], m, d);
    for (std::size_t c = 0; c < 2 * m; ++c) {
      u[c] = ((u[c] - a * vs[i][c] + b * ws[i][c]) % d + d) % d;
    }
  }
}

bool is_zero(const Vec& v) {
  for (int e : v) {
    if (e != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> sample_symplectic(int d, std::size_t m, CounterRng& rng) {
  pauli::require_prime(d);
  if (m == 0) throw std::invalid_argument("symplectic sampling needs m >= 1");
  const pauli::PrimeField field(d);
  std::vector<Vec> vs, ws;
  for (std::size_t j = 0; j < m; ++j) {
    Vec v;
    do {
      v = random_vector(m, d, rng);
      project(v, vs, ws, m, d);
    } while (is_zero(v));
    Vec w;
    int pairing = 0;
    do {
      w = random_vector(m, d, rng);
      project(w, vs, ws, m, d);
      pairing = omega(v, w, m, d);
    } while (pairing == 0);
    const int scale = field.inv(static_cast<std::uint8_t>(pairing));
    for (auto& e : w) e = (e * scale) % d;
    vs.push_back(std::move(v));
    ws.push_back(std::move(w));
  }
  std::vector<Vec> columns;
  for (auto& v : vs) columns.push_back(std::move(v));
  for (auto& w : ws) columns.push_back(std::move(w));
  return columns;
}

CliffordGate sample_random_clifford(int d, std::size_t m, CounterRng& rng) {
  const auto columns = sample_symplectic(d, m, rng);
  std::vector<stabilizer::PauliWord> xs, zs;
  for (std::size_t j = 0; j < 2 * m; ++j) {
    stabilizer::PauliWord w(m, d);
    int xz = 0;
    for (std::size_t i = 0; i < m; ++i) {
      w.set(i, columns[j][i], columns[j][m + i]);
      xz += columns[j][i] * columns[j][m + i];
    }
    if (d == 2) {
      // Hermitian images carry phase i^{x.z}; the extra sign is the Pauli offset.
      w.set_phase(xz + 2 * static_cast<int>(rng.below(2)));
    } else {
      w.set_phase(static_cast<int>(rng.below(static_cast<std::uint32_t>(d))));
    }
    (j < m ? xs : zs).push_back(std::move(w));
  }
  return CliffordGate(std::move(xs), std::move(zs));
}

}  // namespace chanent::circuit
