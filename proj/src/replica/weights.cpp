#include "chanent/replica/weights.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "chanent/replica/weingarten.h"

namespace chanent::replica {

namespace {

void require_same_degree(const Perm& a, std::span<const Perm> up) {
  if (up.empty()) throw std::invalid_argument("a block needs at least one output leg");
  for (const auto& u : up) {
    if (u.degree() != a.degree()) throw std::invalid_argument("permutation degree mismatch");
  }
}

Rational block_dimension(const Rational& d, std::size_t arity) {
  return pow(d, static_cast<long>(arity));
}

}  // namespace

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational v_coeff(const Perm& g1, const Perm& g2, const Rational& d, const Rational& p,
                 std::size_t arity) {
  const std::size_t q = g1.degree();
  const std::size_t n = common_fixed_points(g1, g2);
  const CycleType type = (g1.inverse() * g2).cycle_type();
  const Rational dim = block_dimension(d, arity);
  const Rational keep = 1 - p;
  Rational sum = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (p == 0 && i > 0) break;
    if (p == 1 && i < n) continue;
    const auto& table = cached_weingarten(q - i, dim);
    sum += binomial(n, i) * pow(keep, static_cast<long>(n - i)) * pow(p, static_cast<long>(i)) *
           pow(dim, static_cast<long>(q - i)) * table.value(drop_fixed_points(type, i));
  }
  return sum;
}

Rational block_weight_depolarizing(const Perm& a, std::span<const Perm> up, const Rational& d,
                                   const Rational& p) {
  require_same_degree(a, up);
  const std::size_t q = a.degree();
  const std::size_t n_a = a.fixed_points();
  const Rational keep = 1 - p;
  const Rational inv_d = 1 / d;
  // V depends on (class of tau^-1 a, n_{tau,a}) only.
  std::map<std::pair<CycleType, std::size_t>, Rational> v_memo;
  Rational sum = 0;
  for (const Perm& tau : all_perms(q)) {
    const std::size_t n_ta = common_fixed_points(tau, a);
    if (keep == 0 && n_ta != n_a) continue;
    long power = 0;
    const Perm tau_inv = tau.inverse();
    for (const auto& u : up) power += static_cast<long>((tau_inv * u).distance());
    auto key = std::make_pair((tau_inv * a).cycle_type(), n_ta);
    auto it = v_memo.find(key);
    if (it == v_memo.end()) it = v_memo.emplace(key, v_coeff(tau, a, d, p, up.size())).first;
    if (it->second == 0) continue;
    sum += pow(inv_d, power) * pow(keep, static_cast<long>(n_a - n_ta)) * it->second;
  }
  return pow(keep, static_cast<long>(q - n_a)) * sum;
}

Rational triangle_weight_depolarizing(const Perm& a, const Perm& b, const Perm& c,
                                      const Rational& d, const Rational& p) {
  const Perm up[] = {b, c};
  return block_weight_depolarizing(a, up, d, p);
}

double block_weight_large_d(const Perm& a, std::span<const Perm> up, double d, double p) {
  require_same_degree(a, up);
  const std::size_t q = a.degree();
  const std::size_t n_a = a.fixed_points();
  const Perm a_inv = a.inverse();
  std::vector<std::size_t> wall(up.size());
  long power = 0;
  for (std::size_t j = 0; j < up.size(); ++j) {
    wall[j] = (a_inv * up[j]).distance();
    power += static_cast<long>(wall[j]);
  }
  double sum = 0.0;
  for (const Perm& tau : all_perms(q)) {
    const Perm tau_inv = tau.inverse();
    const std::size_t to_a = (tau_inv * a).distance();
    bool geodesic = true;
    for (std::size_t j = 0; j < up.size() && geodesic; ++j) {
      geodesic = (tau_inv * up[j]).distance() + to_a == wall[j];
    }
    if (!geodesic) continue;
    const std::size_t n_ta = common_fixed_points(tau, a);
    sum += std::pow(1.0 - p, static_cast<double>(n_a - n_ta)) *
           static_cast<double>(moebius(tau_inv * a));
  }
  return std::pow(1.0 - p, static_cast<double>(q - n_a)) * std::pow(d, -static_cast<double>(power)) *
         sum;
}

double triangle_weight_large_d(const Perm& a, const Perm& b, const Perm& c, double d, double p) {
  const Perm up[] = {b, c};
  return block_weight_large_d(a, up, d, p);
}

Rational block_weight_unitary(const Perm& a, std::span<const Perm> up, const Rational& d) {
  require_same_degree(a, up);
  const std::size_t q = a.degree();
  const Rational dim = block_dimension(d, up.size());
  const auto& table = cached_weingarten(q, dim);
  const Rational inv_d = 1 / d;
  Rational sum = 0;
  for (const Perm& tau : all_perms(q)) {
    const Perm tau_inv = tau.inverse();
    long power = 0;
    for (const auto& u : up) power += static_cast<long>((tau_inv * u).distance());
    sum += pow(inv_d, power) * table(tau_inv * a);
  }
  return pow(dim, static_cast<long>(q)) * sum;
}

Rational block_weight_probabilistic(const Perm& a, std::span<const Perm> up, const Rational& d,
                                    const Rational& p) {
  require_same_degree(a, up);
  Rational traced = 0;
  if (p != 0 && a.is_identity()) {
    long power = 0;
    for (const auto& u : up) power += static_cast<long>(u.distance());
    traced = p * pow(1 / d, power);
  }
  if (p == 1) return traced;
  return traced + (1 - p) * block_weight_unitary(a, up, d);
}

Rational triangle_weight_probabilistic(const Perm& a, const Perm& b, const Perm& c,
                                       const Rational& d, const Rational& p) {
  const Perm up[] = {b, c};
  return block_weight_probabilistic(a, up, d, p);
}

}  // namespace chanent::replica
