#include "chanent/replica/lattice.h"

#include <cmath>
#include <map>
#include <stdexcept>

#include "chanent/common/parallel.h"
#include "chanent/replica/weights.h"

namespace chanent::replica {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::kDepolarizingExact: return "depolarizing_exact";
    case WeightKind::kProbabilisticExact: return "probabilistic_exact";
    case WeightKind::kLargeD: return "large_d";
  }
  return "?";
}

WeightKind parse_weight_kind(const std::string& text) {
  if (text == "depolarizing_exact") return WeightKind::kDepolarizingExact;
  if (text == "probabilistic_exact") return WeightKind::kProbabilisticExact;
  if (text == "large_d") return WeightKind::kLargeD;
  throw std::invalid_argument("unknown weight kind '" + text + "'");
}

SpinLattice SpinLattice::from_architecture(const circuit::Architecture& arch, std::size_t depth,
                                           std::size_t q) {
  arch.validate();
  if (arch.kind == circuit::ArchitectureKind::kBoundaryNoise1D) {
    throw std::invalid_argument("the boundary-noise chain has no block-local spin lattice");
  }
  if (q < 1 || q > 9) throw std::invalid_argument("replica number must be in [1, 9]");
  SpinLattice lattice;
  lattice.q_ = q;
  lattice.sites_ = arch.sites();
  lattice.depth_ = depth;
  lattice.top_.assign(lattice.sites_, Perm::identity(q));
  // (node, leg) that last touched each site.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> last(lattice.sites_);
  for (std::size_t layer = 1; layer <= depth; ++layer) {
    for (const auto& block : arch.layer_blocks(layer)) {
      LatticeNode node;
      node.layer = layer;
      node.sites = block;
      node.up.assign(block.size(), std::nullopt);
      const std::size_t index = lattice.nodes_.size();
      for (std::size_t j = 0; j < block.size(); ++j) {
        auto& prev = last[block[j]];
        if (prev) {
          lattice.nodes_[prev->first].up[prev->second] = index;
        } else {
          ++node.bottom_legs;
        }
        prev = std::make_pair(index, j);
      }
      lattice.nodes_.push_back(std::move(node));
    }
  }
  for (std::size_t s = 0; s < lattice.sites_; ++s) {
    if (!last[s]) lattice.idle_.push_back(s);
  }
  return lattice;
}

void SpinLattice::set_top(std::size_t site, const Perm& g) {
  if (g.degree() != q_) throw std::invalid_argument("boundary permutation has the wrong degree");
  top_.at(site) = g;
}

void SpinLattice::set_top(const stabilizer::Region& a, const Perm& inside, const Perm& outside) {
  if (a.system_size() != sites_) throw std::invalid_argument("region does not match the lattice");
  for (std::size_t s = 0; s < sites_; ++s) set_top(s, a.contains(s) ? inside : outside);
}

namespace {

// Sums prod_i weight(i, config) over all configurations with `states` values
// per node. The leading node's value splits the work across workers; partial
// sums are combined in order.
template <class T, class MakeWeight>
T sum_configurations(std::size_t n_nodes, std::size_t states, const EnumerationOptions& options,
                     MakeWeight make_weight) {
  const double evaluations = std::pow(static_cast<double>(states), static_cast<double>(n_nodes)) *
                             static_cast<double>(std::max<std::size_t>(n_nodes, 1));
  if (evaluations > options.budget) {
    throw std::length_error("enumeration of " + std::to_string(evaluations) +
                            " weights exceeds the budget");
  }
  if (n_nodes == 0) return T(1);
  std::vector<T> partial(states, T(0));
  parallel_for(states, static_cast<unsigned>(options.workers), [&](std::size_t lead) {
    auto weight = make_weight();
    std::vector<std::size_t> config(n_nodes, 0);
    config[0] = lead;
    T total(0);
    while (true) {
      T product(1);
      for (std::size_t i = n_nodes; i-- > 0;) {
        product *= weight(i, config);
        if (product == 0) break;
      }
      total += product;
      std::size_t pos = n_nodes;
      while (pos-- > 1) {
        if (++config[pos] < states) break;
        config[pos] = 0;
      }
      if (pos == 0) break;
    }
    partial[lead] = total;
  });
  T sum(0);
  for (const auto& v : partial) sum += v;
  return sum;
}

// Resolves the permutations met by the output legs of node i.
template <class Lookup>
std::vector<Perm> upper_spins(const SpinLattice& lattice, std::size_t i, Lookup spin_of) {
  const auto& node = lattice.nodes()[i];
  std::vector<Perm> up;
  up.reserve(node.up.size());
  for (std::size_t j = 0; j < node.up.size(); ++j) {
    up.push_back(node.up[j] ? spin_of(*node.up[j]) : lattice.top(node.sites[j]));
  }
  return up;
}

template <class T>
T idle_factor(const SpinLattice& lattice, const T& inv_d) {
  T factor(1);
  if (lattice.bottom() != BottomBoundary::kMaximallyMixed) return factor;
  for (std::size_t s : lattice.idle_sites()) {
    for (std::size_t k = 0; k < lattice.top(s).distance(); ++k) factor *= inv_d;
  }
  return factor;
}

}  // namespace

Rational brute_force_partition(const SpinLattice& lattice, WeightKind kind, const Rational& d,
                               const Rational& p, const EnumerationOptions& options) {
  if (kind == WeightKind::kLargeD) {
    throw std::invalid_argument("large_d weights are floating point; use brute_force_partition_large_d");
  }
  if (d <= 0 || p < 0 || p > 1) throw std::invalid_argument("need d > 0 and 0 <= p <= 1");
  const auto& perms = all_perms(lattice.q());
  const Rational inv_d = 1 / d;
  const bool mixed = lattice.bottom() == BottomBoundary::kMaximallyMixed;
  auto make_weight = [&] {
    return [&, memo = std::map<std::vector<std::size_t>, Rational>()](
               std::size_t i, const std::vector<std::size_t>& config) mutable -> Rational {
      const auto& node = lattice.nodes()[i];
      std::vector<std::size_t> key{config[i], node.bottom_legs};
      for (std::size_t j = 0; j < node.up.size(); ++j) {
        key.push_back(node.up[j] ? config[*node.up[j]] : lattice.top(node.sites[j]).index());
      }
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const Perm& a = perms[config[i]];
      const auto up = upper_spins(lattice, i, [&](std::size_t k) { return perms[config[k]]; });
      Rational w = kind == WeightKind::kDepolarizingExact ? block_weight_depolarizing(a, up, d, p)
                                                          : block_weight_probabilistic(a, up, d, p);
      if (mixed) w *= pow(inv_d, static_cast<long>(a.distance() * node.bottom_legs));
      return memo.emplace(std::move(key), w).first->second;
    };
  };
  return idle_factor(lattice, inv_d) *
         sum_configurations<Rational>(lattice.free_spins(), perms.size(), options, make_weight);
}

double brute_force_partition_large_d(const SpinLattice& lattice, double d, double p,
                                     const EnumerationOptions& options) {
  if (d <= 0 || p < 0 || p > 1) throw std::invalid_argument("need d > 0 and 0 <= p <= 1");
  const auto& perms = all_perms(lattice.q());
  const bool mixed = lattice.bottom() == BottomBoundary::kMaximallyMixed;
  auto make_weight = [&] {
    return [&, memo = std::map<std::vector<std::size_t>, double>()](
               std::size_t i, const std::vector<std::size_t>& config) mutable -> double {
      const auto& node = lattice.nodes()[i];
      std::vector<std::size_t> key{config[i], node.bottom_legs};
      for (std::size_t j = 0; j < node.up.size(); ++j) {
        key.push_back(node.up[j] ? config[*node.up[j]] : lattice.top(node.sites[j]).index());
      }
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const Perm& a = perms[config[i]];
      const auto up = upper_spins(lattice, i, [&](std::size_t k) { return perms[config[k]]; });
      double w = block_weight_large_d(a, up, d, p);
      if (mixed) w *= std::pow(d, -static_cast<double>(a.distance() * node.bottom_legs));
      return memo.emplace(std::move(key), w).first->second;
    };
  };
  return idle_factor(lattice, 1.0 / d) *
         sum_configurations<double>(lattice.free_spins(), perms.size(), options, make_weight);
}

Rational brute_force_honeycomb(const SpinLattice& lattice, const Rational& d, const Rational& p,
                               const EnumerationOptions& options) {
  if (d <= 0 || p < 0 || p > 1) throw std::invalid_argument("need d > 0 and 0 <= p <= 1");
  const auto& perms = all_perms(lattice.q());
  const std::size_t n_perm = perms.size();
  const std::size_t q = lattice.q();
  const Rational inv_d = 1 / d;
  const Rational keep = 1 - p;
  const bool mixed = lattice.bottom() == BottomBoundary::kMaximallyMixed;
  // State s of a node encodes the lower spin s / n_perm and the upper spin s % n_perm.
  auto make_weight = [&] {
    return [&, memo = std::map<std::pair<std::size_t, std::size_t>, Rational>()](
               std::size_t i, const std::vector<std::size_t>& config) mutable -> Rational {
      const auto& node = lattice.nodes()[i];
      const Perm& a = perms[config[i] / n_perm];
      const Perm& tau = perms[config[i] % n_perm];
      auto key = std::make_pair(config[i], node.up.size());
      auto it = memo.find(key);
      if (it == memo.end()) {
        const std::size_t n = common_fixed_points(tau, a);
        it = memo.emplace(key, pow(keep, static_cast<long>(q - n)) *
                                   v_coeff(tau, a, d, p, node.up.size())).first;
      }
      Rational w = it->second;
      if (w == 0) return w;
      const Perm tau_inv = tau.inverse();
      long power = 0;
      for (std::size_t j = 0; j < node.up.size(); ++j) {
        const Perm& other = node.up[j] ? perms[config[*node.up[j]] / n_perm] : lattice.top(node.sites[j]);
        power += static_cast<long>((tau_inv * other).distance());
      }
      if (mixed) power += static_cast<long>(a.distance() * node.bottom_legs);
      return w * pow(inv_d, power);
    };
  };
  return idle_factor(lattice, inv_d) *
         sum_configurations<Rational>(lattice.free_spins(), n_perm * n_perm, options, make_weight);
}

}  // namespace chanent::replica
