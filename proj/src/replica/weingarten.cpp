#include "chanent/replica/weingarten.h"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace chanent::replica {

namespace {

Perm class_representative(std::size_t q, const CycleType& type) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t next = 0;
  for (std::size_t len : type) {
    std::vector<std::size_t> cycle(len);
    for (auto& v : cycle) v = next++;
    cycles.push_back(std::move(cycle));
  }
  return Perm::from_cycle_list(q, cycles);
}

// Exact Gaussian elimination; returns false when the system is singular.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

WeingartenTable::WeingartenTable(std::size_t q, Rational dimension, std::map<CycleType, Rational> values)
    : q_(q), dimension_(std::move(dimension)), values_(std::move(values)) {}

const Rational& WeingartenTable::value(const CycleType& type) const {
  auto it = values_.find(type);
  if (it == values_.end()) throw std::invalid_argument("cycle type does not belong to this table");
  return it->second;
}

WeingartenTable weingarten(std::size_t q, const Rational& dimension) {
  if (q > kMaxWeingartenDegree) throw std::invalid_argument("Weingarten degree too large");
  if (dimension <= 0) throw std::invalid_argument("dimension must be positive");
  if (q == 0) return WeingartenTable(0, dimension, {{CycleType{}, Rational(1)}});

  const auto classes = partitions(q);
  std::map<CycleType, std::size_t> class_index;
  for (std::size_t i = 0; i < classes.size(); ++i) class_index[classes[i]] = i;
  std::vector<Rational> dpow(q + 1, Rational(1));
  for (std::size_t j = 1; j <= q; ++j) dpow[j] = dpow[j - 1] * dimension;

  const auto& perms = all_perms(q);
  std::vector<std::size_t> perm_class(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) perm_class[i] = class_index.at(perms[i].cycle_type());

  // A[mu][lambda] = sum over h in class lambda of D^{#cycles(k_mu^-1 h)}.
  const std::size_t nc = classes.size();
  std::vector<std::vector<Rational>> a(nc, std::vector<Rational>(nc, Rational(0)));
  std::vector<Rational> rhs(nc, Rational(0));
  for (std::size_t mu = 0; mu < nc; ++mu) {
    const Perm k_inv = class_representative(q, classes[mu]).inverse();
    std::vector<std::vector<long>> counts(nc, std::vector<long>(q + 1, 0));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      counts[perm_class[i]][(k_inv * perms[i]).cycle_count()]++;
    }
    for (std::size_t lambda = 0; lambda < nc; ++lambda) {
      for (std::size_t c = 0; c <= q; ++c) {
        if (counts[lambda][c]) a[mu][lambda] += Rational(counts[lambda][c]) * dpow[c];
      }
    }
  }
  rhs[class_index.at(CycleType(q, 1))] = 1;
  std::vector<Rational> w;
  if (!solve_exact(std::move(a), std::move(rhs), w)) {
    throw std::domain_error("singular Gram matrix: Q=" + std::to_string(q) +
                            " D=" + to_string(dimension));
  }
  std::map<CycleType, Rational> values;
  for (std::size_t i = 0; i < nc; ++i) values.emplace(classes[i], w[i]);
  return WeingartenTable(q, dimension, std::move(values));
}

const WeingartenTable& cached_weingarten(std::size_t q, const Rational& dimension) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::string>, WeingartenTable> cache;
  const auto key = std::make_pair(q, to_string(dimension));
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  WeingartenTable table = weingarten(q, dimension);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

bool verify_weingarten(const WeingartenTable& table) {
  const std::size_t q = table.degree();
  if (q == 0) return table.value({}) == 1;
  const auto& perms = all_perms(q);
  std::vector<const Rational*> w(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) w[i] = &table(perms[i]);
  std::vector<Rational> dpow(q + 1, Rational(1));
  for (std::size_t j = 1; j <= q; ++j) dpow[j] = dpow[j - 1] * table.dimension();
  for (const Perm& k : perms) {
    const Perm k_inv = k.inverse();
    Rational sum = 0;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      sum += dpow[(k_inv * perms[i]).cycle_count()] * *w[i];
    }
    if (sum != (k.is_identity() ? 1 : 0)) return false;
  }
  return true;
}

long catalan(std::size_t n) {
  long c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * static_cast<long>(i) + 1) / (static_cast<long>(i) + 2);
  return c;
}

long moebius(const CycleType& type) {
  long out = 1;
  for (std::size_t len : type) out *= ((len - 1) % 2 ? -1 : 1) * catalan(len - 1);
  return out;
}

long moebius(const Perm& g) { return moebius(g.cycle_type()); }

CycleType drop_fixed_points(const CycleType& type, std::size_t count) {
  CycleType out = type;
  for (std::size_t i = 0; i < count; ++i) {
    if (out.empty() || out.back() != 1) throw std::invalid_argument("not enough fixed points to drop");
    out.pop_back();
  }
  return out;
}

}  // namespace chanent::replica
