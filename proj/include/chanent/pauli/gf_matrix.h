#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chanent/pauli/gf.h"

namespace chanent::pauli {

class GfMatrix;

struct GfEchelon;

// Dense matrix over GF(d), one byte per entry. Rows of Pauli generators are
// stored as symplectic vectors (x || z) when built with from_pauli_rows.
class GfMatrix {
 public:
  GfMatrix(std::size_t rows, std::size_t cols, int d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int dim() const { return field_.order(); }
  const PrimeField& field() const { return field_; }

  std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int value);
  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_scaled_row(std::size_t dst, std::size_t src, std::uint8_t factor);
  void scale_row(std::size_t r, std::uint8_t factor);

  std::size_t rank() const;
  // Reduced row echelon form: every pivot is 1 and is the only nonzero entry
  // of its column. Zero rows are kept at the bottom.
  GfEchelon row_echelon() const;

  bool operator==(const GfMatrix& other) const {
    return dim() == other.dim() && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint8_t> data_;
};

struct GfEchelon {
  GfMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

}  // namespace chanent::pauli
