#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "chanent/common/rational.h"
#include "chanent/replica/perm.h"

namespace chanent::replica {

using CycleType = std::vector<std::size_t>;

// Exact Weingarten function W_Q(g; D), stored per conjugacy class.
class WeingartenTable {
 public:
  WeingartenTable(std::size_t q, Rational dimension, std::map<CycleType, Rational> values);

  std::size_t degree() const { return q_; }
  const Rational& dimension() const { return dimension_; }
  const Rational& value(const CycleType& type) const;
  const Rational& operator()(const Perm& g) const { return value(g.cycle_type()); }
  const std::map<CycleType, Rational>& values() const { return values_; }

 private:
  std::size_t q_;
  Rational dimension_;
  std::map<CycleType, Rational> values_;
};

inline constexpr std::size_t kMaxWeingartenDegree = 8;

// Solves the Gram system restricted to class functions. Throws
// std::domain_error when the Gram matrix is singular (D too small) and
// std::invalid_argument for Q above kMaxWeingartenDegree.
WeingartenTable weingarten(std::size_t q, const Rational& dimension);

// Memoized variant shared across threads.
const WeingartenTable& cached_weingarten(std::size_t q, const Rational& dimension);

// Checks sum_h D^{#cycles(k^-1 h)} W(h) == delta_{k,id} for every k in S_Q.
bool verify_weingarten(const WeingartenTable& table);

// Leading large-D coefficient: D^{Q+|g|} W_Q(g; D) -> moebius(g).
long moebius(const Perm& g);
long moebius(const CycleType& type);

long catalan(std::size_t n);

// Removes `count` fixed points (1-cycles) from a cycle type.
CycleType drop_fixed_points(const CycleType& type, std::size_t count);

}  // namespace chanent::replica
