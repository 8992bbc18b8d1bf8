#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chanent/pauli/gf_matrix.h"
#include "chanent/pauli/pauli_word.h"

namespace chanent::pauli {

// Symplectic matrix of a list of words: row i is (x_1..x_n | z_1..z_n).
GfMatrix symplectic_matrix(std::span<const PauliWord> rows);

// Number of independent words (mod phases).
std::size_t gf_rank(std::span<const PauliWord> rows);

struct CanonicalForm {
  // Reduced echelon rows with phases carried through the row operations.
  // Column order is (x_{s0}, z_{s0}, x_{s1}, z_{s1}, ...) for site_order
  // s0, s1, ...; zero rows are dropped.
  std::vector<PauliWord> rows;
  // Pivot column index (in the reordered column space) of each row.
  std::vector<std::size_t> pivot_columns;
  // Rows acting as the identity on every site of the leading block.
  std::vector<PauliWord> avoiding;
};

// Brings a commuting set of words to reduced echelon form with pivots ordered
// by site_order. The first `leading` sites of site_order form the block the
// `avoiding` basis must not touch. Throws std::invalid_argument if two rows do
// not commute or site_order is not a permutation of the sites.
CanonicalForm canonicalize(std::span<const PauliWord> rows, std::span<const std::size_t> site_order,
                           std::size_t leading = 0);

// Basis of the subgroup generated by `rows` whose elements act trivially on
// every site in `avoid`.
std::vector<PauliWord> subgroup_avoiding(std::span<const PauliWord> rows,
                                         std::span<const std::size_t> avoid);

}  // namespace chanent::pauli
