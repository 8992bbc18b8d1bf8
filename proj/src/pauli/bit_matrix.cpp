#include "chanent/pauli/bit_matrix.h"

#include <algorithm>
#include <stdexcept>

namespace chanent::pauli {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

BitMatrix BitMatrix::from_gf(const GfMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("BitMatrix requires a GF(2) matrix");
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c)) out.set(r, c, true);
    }
  }
  return out;
}

GfMatrix BitMatrix::to_gf() const {
  GfMatrix out(rows_, cols_, 2);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(r, c, 1);
    }
  }
  return out;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_words(a), row_words(a) + words_, row_words(b));
}

std::size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t found = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (m.get(r, c)) {
        found = r;
        break;
      }
    }
    if (found == rows_) continue;
    m.swap_rows(found, rank);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m.get(r, c)) m.xor_row(r, rank);
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::reduced(std::vector<std::size_t>* pivots) const {
  BitMatrix m = *this;
  if (pivots) pivots->clear();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t found = rows_;
    for (std::size_t r = pivot_row; r < rows_; ++r) {
      if (m.get(r, c)) {
        found = r;
        break;
      }
    }
    if (found == rows_) continue;
    m.swap_rows(found, pivot_row);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != pivot_row && m.get(r, c)) m.xor_row(r, pivot_row);
    }
    if (pivots) pivots->push_back(c);
    ++pivot_row;
  }
  return m;
}

}  // namespace chanent::pauli
