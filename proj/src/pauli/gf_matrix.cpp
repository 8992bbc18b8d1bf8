#include "chanent/pauli/gf_matrix.h"

#include <algorithm>
#include <stdexcept>

namespace chanent::pauli {

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, int d)
    : rows_(rows), cols_(cols), field_(d), data_(rows * cols, 0) {}

void GfMatrix::set(std::size_t r, std::size_t c, int value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("GfMatrix index out of range");
  data_[r * cols_ + c] = field_.from_int(value);
}

void GfMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void GfMatrix::add_scaled_row(std::size_t dst, std::size_t src, std::uint8_t factor) {
  if (factor == 0) return;
  std::uint8_t* d = data_.data() + dst * cols_;
  const std::uint8_t* s = data_.data() + src * cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (s[c] != 0) d[c] = field_.add(d[c], field_.mul(factor, s[c]));
  }
}

void GfMatrix::scale_row(std::size_t r, std::uint8_t factor) {
  std::uint8_t* d = data_.data() + r * cols_;
  for (std::size_t c = 0; c < cols_; ++c) d[c] = field_.mul(d[c], factor);
}

GfEchelon GfMatrix::row_echelon() const {
  GfEchelon out{*this, {}};
  GfMatrix& m = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t found = rows_;
    for (std::size_t r = pivot_row; r < rows_; ++r) {
      if (m.at(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) continue;
    m.swap_rows(found, pivot_row);
    m.scale_row(pivot_row, field_.inv(m.at(pivot_row, c)));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != pivot_row && m.at(r, c) != 0) {
        m.add_scaled_row(r, pivot_row, field_.neg(m.at(r, c)));
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t GfMatrix::rank() const {
  GfMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t found = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (m.at(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) continue;
    m.swap_rows(found, rank);
    const std::uint8_t inv = field_.inv(m.at(rank, c));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m.at(r, c) != 0) m.add_scaled_row(r, rank, field_.neg(field_.mul(m.at(r, c), inv)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace chanent::pauli
