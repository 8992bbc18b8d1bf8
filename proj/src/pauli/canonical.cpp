#include "chanent/pauli/canonical.h"

#include <stdexcept>

namespace chanent::pauli {

namespace {

int entry(const PauliWord& w, std::span<const std::size_t> order, std::size_t col) {
  const std::size_t site = order[col / 2];
  return col % 2 == 0 ? w.x(site) : w.z(site);
}

}  // namespace

GfMatrix symplectic_matrix(std::span<const PauliWord> rows) {
  if (rows.empty()) return GfMatrix(0, 0, 2);
  const std::size_t n = rows.front().size();
  GfMatrix m(rows.size(), 2 * n, rows.front().dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n || rows[r].dim() != m.dim()) {
      throw std::invalid_argument("rows differ in size or local dimension");
    }
    for (std::size_t i = 0; i < n; ++i) {
      m.set(r, i, rows[r].x(i));
      m.set(r, n + i, rows[r].z(i));
    }
  }
  return m;
}

std::size_t gf_rank(std::span<const PauliWord> rows) { return symplectic_matrix(rows).rank(); }

CanonicalForm canonicalize(std::span<const PauliWord> rows, std::span<const std::size_t> site_order,
                           std::size_t leading) {
  CanonicalForm out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  const int d = rows.front().dim();
  if (site_order.size() != n) throw std::invalid_argument("site_order must list every site");
  std::vector<bool> seen(n, false);
  for (std::size_t s : site_order) {
    if (s >= n || seen[s]) throw std::invalid_argument("site_order is not a permutation");
    seen[s] = true;
  }
  if (leading > n) throw std::invalid_argument("leading block larger than the system");
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (symplectic_form(rows[a], rows[b]) != 0) {
        throw std::invalid_argument("canonicalize: rows do not commute");
      }
    }
  }

  const PrimeField field(d);
  std::vector<PauliWord> m(rows.begin(), rows.end());
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < 2 * n && pivot_row < m.size(); ++c) {
    std::size_t found = m.size();
    for (std::size_t r = pivot_row; r < m.size(); ++r) {
      if (entry(m[r], site_order, c) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.size()) continue;
    std::swap(m[found], m[pivot_row]);
    const auto lead = static_cast<std::uint8_t>(entry(m[pivot_row], site_order, c));
    if (lead != 1) m[pivot_row] = m[pivot_row].pow(field.inv(lead));
    for (std::size_t r = 0; r < m.size(); ++r) {
      const int e = r == pivot_row ? 0 : entry(m[r], site_order, c);
      if (e != 0) m[r] *= m[pivot_row].pow(d - e);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  m.resize(pivot_row);
  out.rows = std::move(m);
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    if (out.pivot_columns[r] >= 2 * leading) out.avoiding.push_back(out.rows[r]);
  }
  return out;
}

std::vector<PauliWord> subgroup_avoiding(std::span<const PauliWord> rows,
                                         std::span<const std::size_t> avoid) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::vector<std::size_t> order;
  std::vector<bool> in_avoid(n, false);
  for (std::size_t s : avoid) {
    if (s >= n) throw std::out_of_range("site out of range");
    if (!in_avoid[s]) order.push_back(s);
    in_avoid[s] = true;
  }
  const std::size_t leading = order.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (!in_avoid[s]) order.push_back(s);
  }
  return canonicalize(rows, order, leading).avoiding;
}

}  // namespace chanent::pauli
