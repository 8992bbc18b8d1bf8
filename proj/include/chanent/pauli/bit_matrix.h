#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "chanent/pauli/gf_matrix.h"

namespace chanent::pauli {

// Matrix over GF(2) with each row packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix from_gf(const GfMatrix& m);
  GfMatrix to_gf() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
  }
  std::uint64_t* row_words(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * words_; }

  void xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row_words(dst);
    const std::uint64_t* s = row_words(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b);

  std::size_t rank() const;
  // Reduced row echelon form and pivot columns, in the same convention as
  // GfMatrix::row_echelon.
  BitMatrix reduced(std::vector<std::size_t>* pivots) const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace chanent::pauli
