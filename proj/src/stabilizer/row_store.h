#pragma once

// Tableau storage backends used by MixedStabilizerState. Both expose the same
// small interface so the elimination routines below are written once.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "chanent/pauli/gf.h"
#include "chanent/pauli/pauli_word.h"

namespace chanent::stabilizer::detail {

#ifdef CHANENT_TRACK_PHASES
inline constexpr bool kTrackPhases = true;
#else
inline constexpr bool kTrackPhases = false;
#endif

// Qubit rows: per row, W words of x bits followed by W words of z bits.
class PackedRows {
 public:
  PackedRows(std::size_t n, std::size_t rows)
      : n_(n), words_((n + 63) / 64), rows_(rows), bits_(rows * 2 * words_, 0), phase_(rows, 0) {}

  static constexpr bool kBinary = true;

  std::size_t sites() const { return n_; }
  std::size_t rows() const { return rows_; }
  int dim() const { return 2; }
  std::size_t words() const { return words_; }

  std::uint64_t* xw(std::size_t r) { return bits_.data() + r * 2 * words_; }
  std::uint64_t* zw(std::size_t r) { return xw(r) + words_; }
  const std::uint64_t* xw(std::size_t r) const { return bits_.data() + r * 2 * words_; }
  const std::uint64_t* zw(std::size_t r) const { return xw(r) + words_; }

  int x(std::size_t r, std::size_t s) const { return (xw(r)[s / 64] >> (s % 64)) & 1u; }
  int z(std::size_t r, std::size_t s) const { return (zw(r)[s / 64] >> (s % 64)) & 1u; }
  // Entry of column (site, is_z).
  int get(std::size_t r, std::size_t s, bool is_z) const { return is_z ? z(r, s) : x(r, s); }
  void set(std::size_t r, std::size_t s, int x, int z) {
    const std::uint64_t bit = std::uint64_t{1} << (s % 64);
    std::uint64_t& wx = xw(r)[s / 64];
    std::uint64_t& wz = zw(r)[s / 64];
    wx = (x & 1) ? (wx | bit) : (wx & ~bit);
    wz = (z & 1) ? (wz | bit) : (wz & ~bit);
  }
  int phase(std::size_t r) const { return phase_[r]; }
  void set_phase(std::size_t r, int phase) { phase_[r] = static_cast<std::uint8_t>(phase & 3); }

  // row[dst] <- row[dst] * row[src]^factor (factor is 1 over GF(2)).
  void multiply_into(std::size_t dst, std::size_t src, int /*factor*/ = 1) {
    std::uint64_t* dx = xw(dst);
    std::uint64_t* dz = zw(dst);
    const std::uint64_t* sx = xw(src);
    const std::uint64_t* sz = zw(src);
    if constexpr (kTrackPhases) {
      int commutation = 0;
      for (std::size_t w = 0; w < words_; ++w) commutation += std::popcount(dz[w] & sx[w]);
      phase_[dst] = static_cast<std::uint8_t>((phase_[dst] + phase_[src] + 2 * commutation) & 3);
    }
    for (std::size_t w = 0; w < words_; ++w) {
      dx[w] ^= sx[w];
      dz[w] ^= sz[w];
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(xw(a), xw(a) + 2 * words_, xw(b));
    std::swap(phase_[a], phase_[b]);
  }

  // Drops the first `count` rows.
  void drop_front(std::size_t count) {
    bits_.erase(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(count * 2 * words_));
    phase_.erase(phase_.begin(), phase_.begin() + static_cast<std::ptrdiff_t>(count));
    rows_ -= count;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::size_t rows_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> phase_;
};

// Odd prime rows: per row, n bytes of x exponents followed by n bytes of z.
class ByteRows {
 public:
  ByteRows(std::size_t n, std::size_t rows, int d)
      : n_(n), rows_(rows), field_(d), digits_(rows * 2 * n, 0), phase_(rows, 0) {}

  static constexpr bool kBinary = false;

  std::size_t sites() const { return n_; }
  std::size_t rows() const { return rows_; }
  int dim() const { return field_.order(); }
  const pauli::PrimeField& field() const { return field_; }

  std::uint8_t* xs(std::size_t r) { return digits_.data() + r * 2 * n_; }
  std::uint8_t* zs(std::size_t r) { return xs(r) + n_; }
  const std::uint8_t* xs(std::size_t r) const { return digits_.data() + r * 2 * n_; }
  const std::uint8_t* zs(std::size_t r) const { return xs(r) + n_; }

  int x(std::size_t r, std::size_t s) const { return xs(r)[s]; }
  int z(std::size_t r, std::size_t s) const { return zs(r)[s]; }
  int get(std::size_t r, std::size_t s, bool is_z) const { return is_z ? z(r, s) : x(r, s); }
  void set(std::size_t r, std::size_t s, int x, int z) {
    xs(r)[s] = field_.from_int(x);
    zs(r)[s] = field_.from_int(z);
  }
  int phase(std::size_t r) const { return phase_[r]; }
  void set_phase(std::size_t r, int phase) { phase_[r] = field_.from_int(phase); }

  void multiply_into(std::size_t dst, std::size_t src, int factor) {
    const auto f = field_.from_int(factor);
    if (f == 0) return;
    std::uint8_t* dx = xs(dst);
    std::uint8_t* dz = zs(dst);
    const std::uint8_t* sx = xs(src);
    const std::uint8_t* sz = zs(src);
    if constexpr (kTrackPhases) {
      // (w^c X^x Z^z)^f = w^{fc + f(f-1)/2 x.z} X^{fx} Z^{fz}; then the product
      // with the destination picks up w^{f z_dst . x_src}.
      long long self = 0;
      long long cross = 0;
      for (std::size_t s = 0; s < n_; ++s) {
        self += static_cast<long long>(sx[s]) * sz[s];
        cross += static_cast<long long>(dz[s]) * sx[s];
      }
      const long long ff = f;
      const long long total =
          phase_[dst] + ff * phase_[src] + (ff * (ff - 1) / 2) * self + ff * cross;
      phase_[dst] = field_.from_int(total);
    }
    for (std::size_t s = 0; s < n_; ++s) {
      if (sx[s]) dx[s] = field_.add(dx[s], field_.mul(f, sx[s]));
      if (sz[s]) dz[s] = field_.add(dz[s], field_.mul(f, sz[s]));
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(xs(a), xs(a) + 2 * n_, xs(b));
    std::swap(phase_[a], phase_[b]);
  }

  void drop_front(std::size_t count) {
    digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(count * 2 * n_));
    phase_.erase(phase_.begin(), phase_.begin() + static_cast<std::ptrdiff_t>(count));
    rows_ -= count;
  }

 private:
  std::size_t n_;
  std::size_t rows_;
  pauli::PrimeField field_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint8_t> phase_;
};

struct Column {
  std::size_t site;
  bool is_z;
};

// Row echelon elimination over the listed columns, in order, starting at row
// `first`. Pivot rows are moved to [first, first + rank); every row below a
// pivot is cleared in that pivot's column. Returns the pivot column index (into
// `columns`) of each pivot row.
template <class Rows>
std::vector<std::size_t> eliminate(Rows& rows, const std::vector<Column>& columns,
                                   std::size_t first = 0) {
  std::vector<std::size_t> pivots;
  std::size_t next = first;
  for (std::size_t c = 0; c < columns.size() && next < rows.rows(); ++c) {
    const Column col = columns[c];
    std::size_t found = rows.rows();
    for (std::size_t r = next; r < rows.rows(); ++r) {
      if (rows.get(r, col.site, col.is_z) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows.rows()) continue;
    rows.swap_rows(found, next);
    if constexpr (Rows::kBinary) {
      for (std::size_t r = next + 1; r < rows.rows(); ++r) {
        if (rows.get(r, col.site, col.is_z)) rows.multiply_into(r, next);
      }
    } else {
      const auto& f = rows.field();
      const auto lead_inv = f.inv(static_cast<std::uint8_t>(rows.get(next, col.site, col.is_z)));
      for (std::size_t r = next + 1; r < rows.rows(); ++r) {
        const int e = rows.get(r, col.site, col.is_z);
        if (e != 0) rows.multiply_into(r, next, f.neg(f.mul(static_cast<std::uint8_t>(e), lead_inv)));
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace chanent::stabilizer::detail
