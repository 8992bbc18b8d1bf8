#include "chanent/stabilizer/mixed_state.h"

#include <bit>
#include <stdexcept>
#include <variant>

#include "chanent/pauli/bit_matrix.h"
#include "chanent/pauli/canonical.h"
#include "chanent/pauli/gf.h"
#include "row_store.h"

namespace chanent::stabilizer {

using detail::ByteRows;
using detail::Column;
using detail::PackedRows;

struct MixedStabilizerState::Tableau {
  std::variant<PackedRows, ByteRows> rows;
};

namespace {

template <class Rows>
PauliWord row_word(const Rows& rows, std::size_t r) {
  PauliWord w(rows.sites(), rows.dim());
  for (std::size_t s = 0; s < rows.sites(); ++s) w.set(s, rows.x(r, s), rows.z(r, s));
  w.set_phase(rows.phase(r));
  return w;
}

std::vector<Column> columns_of(std::span<const std::size_t> sites) {
  std::vector<Column> cols;
  cols.reserve(2 * sites.size());
  for (std::size_t s : sites) {
    cols.push_back({s, false});
    cols.push_back({s, true});
  }
  return cols;
}

template <class Rows>
void apply_gate(Rows& rows, const CliffordGate& gate, std::span<const std::size_t> sites) {
  const std::size_t m = sites.size();
  const auto d = static_cast<std::uint32_t>(rows.dim());
  const int modulus = d == 2 ? 4 : static_cast<int>(d);
  std::vector<std::uint32_t> place(2 * m);
  for (std::size_t j = 0, p = 1; j < 2 * m; ++j, p *= d) place[j] = static_cast<std::uint32_t>(p);
  std::vector<int> digits(2 * m);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::uint32_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) {
      idx += static_cast<std::uint32_t>(rows.x(r, sites[j])) * place[j];
      idx += static_cast<std::uint32_t>(rows.z(r, sites[j])) * place[m + j];
    }
    if (idx == 0) continue;
    if (gate.has_table()) {
      const auto& entry = gate.lookup(idx);
      std::uint32_t out = entry.pattern;
      for (auto& digit : digits) {
        digit = static_cast<int>(out % d);
        out /= d;
      }
      for (std::size_t j = 0; j < m; ++j) rows.set(r, sites[j], digits[j], digits[m + j]);
      if constexpr (detail::kTrackPhases) {
        rows.set_phase(r, (rows.phase(r) + entry.phase) % modulus);
      }
    } else {
      PauliWord local(m, rows.dim());
      for (std::size_t j = 0; j < m; ++j) local.set(j, rows.x(r, sites[j]), rows.z(r, sites[j]));
      const PauliWord image = gate.conjugate(local);
      for (std::size_t j = 0; j < m; ++j) rows.set(r, sites[j], image.x(j), image.z(j));
      if constexpr (detail::kTrackPhases) {
        rows.set_phase(r, (rows.phase(r) + image.phase()) % modulus);
      }
    }
  }
}

}  // namespace

MixedStabilizerState::MixedStabilizerState(std::size_t n, int d, std::unique_ptr<Tableau> tableau)
    : n_(n), d_(d), tableau_(std::move(tableau)) {}

MixedStabilizerState::MixedStabilizerState(const MixedStabilizerState& other)
    : n_(other.n_), d_(other.d_), tableau_(std::make_unique<Tableau>(*other.tableau_)) {}
MixedStabilizerState::MixedStabilizerState(MixedStabilizerState&&) noexcept = default;
MixedStabilizerState& MixedStabilizerState::operator=(const MixedStabilizerState& other) {
  if (this != &other) {
    n_ = other.n_;
    d_ = other.d_;
    tableau_ = std::make_unique<Tableau>(*other.tableau_);
  }
  return *this;
}
MixedStabilizerState& MixedStabilizerState::operator=(MixedStabilizerState&&) noexcept = default;
MixedStabilizerState::~MixedStabilizerState() = default;

MixedStabilizerState MixedStabilizerState::product_state(std::size_t n, int d) {
  pauli::require_prime(d);
  if (n == 0) throw std::invalid_argument("state needs at least one site");
  auto tab = d == 2 ? std::make_unique<Tableau>(Tableau{PackedRows(n, n)})
                    : std::make_unique<Tableau>(Tableau{ByteRows(n, n, d)});
  std::visit([&](auto& rows) {
    for (std::size_t i = 0; i < n; ++i) rows.set(i, i, 0, 1);
  }, tab->rows);
  return MixedStabilizerState(n, d, std::move(tab));
}

MixedStabilizerState MixedStabilizerState::maximally_mixed(std::size_t n, int d) {
  pauli::require_prime(d);
  if (n == 0) throw std::invalid_argument("state needs at least one site");
  auto tab = d == 2 ? std::make_unique<Tableau>(Tableau{PackedRows(n, 0)})
                    : std::make_unique<Tableau>(Tableau{ByteRows(n, 0, d)});
  return MixedStabilizerState(n, d, std::move(tab));
}

MixedStabilizerState MixedStabilizerState::from_generators(std::span<const PauliWord> gens) {
  if (gens.empty()) throw std::invalid_argument("use maximally_mixed for an empty generator set");
  const std::size_t n = gens.front().size();
  const int d = gens.front().dim();
  for (const auto& g : gens) {
    if (g.size() != n || g.dim() != d) throw std::invalid_argument("generator shape mismatch");
  }
  auto tab = d == 2 ? std::make_unique<Tableau>(Tableau{PackedRows(n, gens.size())})
                    : std::make_unique<Tableau>(Tableau{ByteRows(n, gens.size(), d)});
  std::visit([&](auto& rows) {
    for (std::size_t r = 0; r < gens.size(); ++r) {
      for (std::size_t s = 0; s < n; ++s) rows.set(r, s, gens[r].x(s), gens[r].z(s));
      rows.set_phase(r, gens[r].phase());
    }
  }, tab->rows);
  MixedStabilizerState state(n, d, std::move(tab));
  try {
    state.check_invariants();
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(e.what());
  }
  return state;
}

std::size_t MixedStabilizerState::rank() const {
  return std::visit([](const auto& rows) { return rows.rows(); }, tableau_->rows);
}

std::vector<PauliWord> MixedStabilizerState::generators() const {
  return std::visit([](const auto& rows) {
    std::vector<PauliWord> out;
    out.reserve(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(row_word(rows, r));
    return out;
  }, tableau_->rows);
}

void MixedStabilizerState::apply(const CliffordGate& gate, std::span<const std::size_t> sites) {
  if (gate.dim() != d_) throw std::invalid_argument("gate dimension does not match the state");
  if (sites.size() != gate.arity()) throw std::invalid_argument("gate arity does not match sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] >= n_) throw std::out_of_range("gate site out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (sites[i] == sites[j]) throw std::invalid_argument("gate sites must be distinct");
    }
  }
  std::visit([&](auto& rows) { apply_gate(rows, gate, sites); }, tableau_->rows);
#ifndef NDEBUG
  check_invariants();
#endif
}

void MixedStabilizerState::apply_trace(std::span<const std::size_t> sites) {
  for (std::size_t s : sites) {
    if (s >= n_) throw std::out_of_range("trace site out of range");
  }
  const auto cols = columns_of(sites);
  std::visit([&](auto& rows) {
    const auto pivots = detail::eliminate(rows, cols);
    rows.drop_front(pivots.size());
  }, tableau_->rows);
#ifndef NDEBUG
  check_invariants();
#endif
}

void MixedStabilizerState::require_region(const Region& a) const {
  if (a.system_size() != n_) throw std::invalid_argument("region built for a different system size");
}

long MixedStabilizerState::entropy_dits(const Region& a) const {
  require_region(a);
  if (a.empty()) return 0;
  // S_A = |A| - dim G_A and dim G_A = k - rank(G restricted to the complement).
  const auto cols = columns_of(a.complement().sites());
  const std::size_t restricted_rank = std::visit([&](const auto& rows) {
    auto copy = rows;
    return detail::eliminate(copy, cols).size();
  }, tableau_->rows);
  return static_cast<long>(a.size()) - static_cast<long>(rank()) +
         static_cast<long>(restricted_rank);
}

long MixedStabilizerState::mutual_information_dits(const Region& a, const Region& b) const {
  require_region(a);
  require_region(b);
  if (a.overlaps(b)) throw std::invalid_argument("mutual information needs disjoint regions");
  return entropy_dits(a) + entropy_dits(b) - entropy_dits(a.united(b));
}

long MixedStabilizerState::operator_entanglement_dits(const Region& a) const {
  return mutual_information_dits(a, a.complement());
}

double MixedStabilizerState::log_negativity_bits(const Region& a) const {
  require_region(a);
  if (d_ != 2) throw std::domain_error("log-negativity is only implemented for qubits");
  const auto& rows = std::get<PackedRows>(tableau_->rows);
  const std::size_t k = rows.rows();
  std::vector<std::uint64_t> mask(rows.words(), 0);
  for (std::size_t s : a.sites()) mask[s / 64] |= std::uint64_t{1} << (s % 64);
  pauli::BitMatrix j(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      int parity = 0;
      for (std::size_t w = 0; w < rows.words(); ++w) {
        const std::uint64_t v =
            ((rows.xw(p)[w] & rows.zw(q)[w]) ^ (rows.zw(p)[w] & rows.xw(q)[w])) & mask[w];
        parity ^= std::popcount(v) & 1;
      }
      if (parity) {
        j.set(p, q, true);
        j.set(q, p, true);
      }
    }
  }
  return 0.5 * static_cast<double>(j.rank());
}

CutProfile MixedStabilizerState::cut_profile() const {
  CutProfile out;
  out.n = n_;
  out.k = rank();
  out.prefix_dim.assign(n_ + 1, 0);
  out.suffix_dim.assign(n_ + 1, 0);
  std::vector<Column> descending;
  std::vector<Column> ascending;
  for (std::size_t i = 0; i < n_; ++i) {
    descending.push_back({n_ - 1 - i, false});
    descending.push_back({n_ - 1 - i, true});
    ascending.push_back({i, false});
    ascending.push_back({i, true});
  }
  // In echelon form with columns ordered from the right end, a row's pivot sits
  // on its rightmost site, and the subgroup supported on [0, a) is spanned by
  // the rows whose pivot site is below a. The mirror argument gives suffixes.
  std::vector<long> right_end(n_ + 1, 0);
  std::vector<long> left_end(n_ + 1, 0);
  std::visit([&](const auto& rows) {
    auto copy = rows;
    for (std::size_t c : detail::eliminate(copy, descending)) ++right_end[n_ - 1 - c / 2];
    copy = rows;
    for (std::size_t c : detail::eliminate(copy, ascending)) ++left_end[c / 2];
  }, tableau_->rows);
  for (std::size_t a = 1; a <= n_; ++a) out.prefix_dim[a] = out.prefix_dim[a - 1] + right_end[a - 1];
  for (std::size_t a = n_; a-- > 0;) out.suffix_dim[a] = out.suffix_dim[a + 1] + left_end[a];
  return out;
}

void MixedStabilizerState::check_invariants() const {
  const auto gens = generators();
  if (gens.size() > n_) throw std::logic_error("more generators than sites");
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (pauli::symplectic_form(gens[a], gens[b]) != 0) {
        throw std::logic_error("stabilizer generators do not commute");
      }
    }
  }
  if (!gens.empty() && pauli::gf_rank(gens) != gens.size()) {
    throw std::logic_error("stabilizer generators are not independent");
  }
}

}  // namespace chanent::stabilizer
