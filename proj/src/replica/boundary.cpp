#include "chanent/replica/boundary.h"

#include <stdexcept>
#include <vector>

namespace chanent::replica {

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kMutual: return "mutual";
    case MeasureKind::kOpEE: return "opEE";
    case MeasureKind::kNegativity: return "negativity";
  }
  return "?";
}

MeasureKind parse_measure_kind(const std::string& text) {
  if (text == "mutual") return MeasureKind::kMutual;
  if (text == "opEE" || text == "op_ee") return MeasureKind::kOpEE;
  if (text == "negativity") return MeasureKind::kNegativity;
  throw std::invalid_argument("unknown measure '" + text + "'");
}

const Perm& BoundaryPerms::operator[](char name) const {
  auto it = perms.find(name);
  if (it == perms.end()) throw std::out_of_range(std::string("no boundary permutation '") + name + "'");
  return it->second;
}

namespace {

using Cycles = std::vector<std::vector<std::size_t>>;

// Repeats a pattern given on `block` points `copies` times.
Perm repeated(std::size_t block, std::size_t copies, const Cycles& pattern) {
  Cycles all;
  for (std::size_t k = 0; k < copies; ++k) {
    for (const auto& cycle : pattern) {
      std::vector<std::size_t> shifted;
      for (std::size_t v : cycle) shifted.push_back(v + k * block);
      all.push_back(std::move(shifted));
    }
  }
  return Perm::from_cycle_list(block * copies, all);
}

}  // namespace

BoundaryPerms boundary_permutations(MeasureKind kind, std::size_t n, std::size_t alpha) {
  if (n < 2) throw std::invalid_argument("Renyi index n must be at least 2");
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  BoundaryPerms out{kind, n, alpha, 0, {}};
  Cycles forward(1), backward(1);
  for (std::size_t i = 0; i < n; ++i) {
    forward[0].push_back(i);
    backward[0].push_back(n - 1 - i);
  }
  switch (kind) {
    case MeasureKind::kMutual:
    case MeasureKind::kNegativity:
      out.q = n * alpha;
      out.perms.emplace('a', Perm::identity(out.q));
      out.perms.emplace('b', repeated(n, alpha, forward));
      if (kind == MeasureKind::kNegativity) out.perms.emplace('e', repeated(n, alpha, backward));
      break;
    case MeasureKind::kOpEE: {
      out.q = 2 * n * alpha;
      Cycles shifted, paired;
      for (std::size_t i = 0; i < n; ++i) {
        shifted.push_back({2 * i + 1, (2 * i + 2) % (2 * n)});
        paired.push_back({2 * i, 2 * i + 1});
      }
      out.perms.emplace('c', repeated(2 * n, alpha, shifted));
      out.perms.emplace('d', repeated(2 * n, alpha, paired));
      break;
    }
  }
  if (out.q > kMaxDegree) throw std::invalid_argument("replica number above 16");
  return out;
}

}  // namespace chanent::replica
