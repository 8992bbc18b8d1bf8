#include "chanent/domainwall/domainwall.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chanent::domainwall {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

void require_d(double d) {
  if (!(d > 1.0)) throw std::invalid_argument("d must exceed 1");
}

void require_exact(const Rational& d, const Rational& p) {
  if (d <= 1) throw std::invalid_argument("d must exceed 1");
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
}

double log_keep(double p) { return p >= 1.0 ? kNegInf : std::log1p(-p); }

// log(exp(a) + exp(b)) with -inf as the additive zero.
double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_mul(double a, double b) { return (a == kNegInf || b == kNegInf) ? kNegInf : a + b; }

double log_scaled(double k, double log_x) { return k == 0.0 ? 0.0 : (log_x == kNegInf ? kNegInf : k * log_x); }

// Weights shared by the large-t recursions: q = (1-p)^2 per triangle above the
// wall, c = 1/d per corner, h = (1 - q)/d^2 per horizontal segment.
struct ExactWeights {
  Rational q, c, h;
  ExactWeights(const Rational& d, const Rational& p) {
    q = (1 - p) * (1 - p);
    c = 1 / d;
    h = (1 - q) / (d * d);
  }
};

struct LogWeights {
  double log_q, log_c, log_h;
  LogWeights(double d, double p) {
    log_q = log_scaled(2.0, log_keep(p));
    log_c = -std::log(d);
    const double one_minus_q = p * (2.0 - p);
    log_h = one_minus_q > 0.0 ? std::log(one_minus_q) - 2.0 * std::log(d) : kNegInf;
  }
};

}  // namespace

void WallParams::validate() const {
  require_d(d);
  require_p(p);
  if (L % 2 != 0) throw std::invalid_argument("L must be even");
}

double log_z_bb_small_t(const WallParams& params, std::size_t q) {
  params.validate();
  return log_scaled(static_cast<double>(q * params.L * params.t) / 2.0, log_keep(params.p));
}

double log_z_ab_small_t(const WallParams& params) {
  params.validate();
  const double t = static_cast<double>(params.t);
  const double lk = log_keep(params.p);
  double out = t * std::log(2.0 / params.d) + log_scaled(static_cast<double>(params.L) * t / 2.0, lk);
  if (params.p >= 1.0 && params.t > 0) return kNegInf;
  for (std::size_t i = 1; i <= params.t; ++i) {
    const double x = static_cast<double>(i) * lk;
    // log(cosh(x)) computed stably.
    out += std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x))) - std::log(2.0);
  }
  return out;
}

double vertical_wall_log_weight(double d, bool d2_corrected) {
  require_d(d);
  return d2_corrected ? std::log((d * d + 1.0) / (2.0 * d)) : std::log(d / 2.0);
}

std::vector<double> mutual_info_small_t(const WallParams& params, bool d2_corrected) {
  params.validate();
  if (params.p >= 1.0) throw std::domain_error("the small-t expansion needs p < 1");
  const double slope = 2.0 * vertical_wall_log_weight(params.d, d2_corrected);
  const double lk = log_keep(params.p);
  std::vector<double> out(params.t + 1, 0.0);
  double correction = 0.0;
  for (std::size_t t = 1; t <= params.t; ++t) {
    const double x = std::abs(static_cast<double>(t) * lk);
    correction += x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0);
    out[t] = slope * static_cast<double>(t) - 2.0 * correction;
  }
  return out;
}

std::vector<double> op_ee_small_t(const WallParams& params, bool d2_corrected) {
  params.validate();
  const double slope = 2.0 * vertical_wall_log_weight(params.d, d2_corrected);
  std::vector<double> out(params.t + 1);
  for (std::size_t t = 0; t <= params.t; ++t) out[t] = slope * static_cast<double>(t);
  return out;
}

std::vector<double> s2_total_small_t(const WallParams& params) {
  params.validate();
  if (params.p >= 1.0) throw std::domain_error("the small-t expansion needs p < 1");
  const double slope = -static_cast<double>(params.L) * log_keep(params.p);
  std::vector<double> out(params.t + 1);
  for (std::size_t t = 0; t <= params.t; ++t) out[t] = slope * static_cast<double>(t);
  return out;
}

std::vector<Rational> hanging_u(std::size_t n, const Rational& d, const Rational& p) {
  require_exact(d, p);
  const ExactWeights w(d, p);
  std::vector<Rational> u(n + 1);
  u[0] = 1;
  Rational qk = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational sum = w.h * u[m - 1];
    Rational qj = 1;
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      qj *= w.q;
      sum += qj * w.c * u[k - 1] * w.c * w.h * u[m - 1 - k];
    }
    qk *= w.q;
    sum += qk * w.c * u[m - 1] * w.c;
    u[m] = sum;
  }
  return u;
}

std::vector<std::pair<Rational, Rational>> boundary_v(std::size_t n, const Rational& d,
                                                      const Rational& p) {
  require_exact(d, p);
  const ExactWeights w(d, p);
  const auto u = hanging_u(n, d, p);
  std::vector<Rational> v(n + 1), vp(n + 1);
  vp[0] = 1;
  v[0] = w.c * vp[0];
  Rational qn = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    qn *= w.q;
    Rational sum_v = w.h * v[m - 1];
    Rational sum_vp = w.h * vp[m - 1];
    Rational qj = 1;
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      qj *= w.q;
      const Rational inner = qj * w.c * u[k - 1] * w.c * w.h;
      sum_v += inner * v[m - 1 - k];
      sum_vp += inner * vp[m - 1 - k];
    }
    vp[m] = sum_vp + qn * w.c * v[m - 1];
    v[m] = sum_v + qn * w.c * vp[m];
  }
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t m = 0; m <= n; ++m) out.emplace_back(v[m], vp[m]);
  return out;
}

Rational attached_w(std::size_t L, const Rational& d, const Rational& p) {
  require_exact(d, p);
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("L must be even and positive");
  const std::size_t half = L / 2;
  const ExactWeights w(d, p);
  const auto v = boundary_v(half, d, p);
  // The first attachment at k = half - 1 leaves an empty right part, v_{-1} = d.
  auto v_at = [&](long k) { return k < 0 ? d : v[static_cast<std::size_t>(k)].first; };
  Rational sum = 0;
  Rational qk = 1;
  for (std::size_t k = 0; k < half; ++k) {
    sum += qk * w.c * v[k].second * w.h * v_at(static_cast<long>(half) - static_cast<long>(k) - 2);
    qk *= w.q;
  }
  return sum;
}

Rational z_bb_large_t(std::size_t L, const Rational& d, const Rational& p) {
  if (p == 0) throw std::domain_error("Z_bb diverges without noise");
  return attached_w(L, d, p) / (1 - pow(1 - p, static_cast<long>(L)));
}

Rational z_ba_large_t(std::size_t a_size, const Rational& d, const Rational& p) {
  const auto v = boundary_v(a_size / 2, d, p);
  return a_size % 2 == 0 ? v[a_size / 2].second : v[a_size / 2].first;
}

std::vector<double> log_hanging_u(std::size_t n, double d, double p) {
  require_d(d);
  require_p(p);
  const LogWeights w(d, p);
  std::vector<double> u(n + 1);
  u[0] = 0.0;
  for (std::size_t m = 1; m <= n; ++m) {
    double sum = log_mul(w.log_h, u[m - 1]);
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      const double term = log_mul(log_scaled(static_cast<double>(k), w.log_q),
                                  2.0 * w.log_c + w.log_h + u[k - 1] + u[m - 1 - k]);
      sum = log_add(sum, term);
    }
    sum = log_add(sum, log_mul(log_scaled(static_cast<double>(m), w.log_q), 2.0 * w.log_c + u[m - 1]));
    u[m] = sum;
  }
  return u;
}

std::vector<std::pair<double, double>> log_boundary_v(std::size_t n, double d, double p) {
  const auto u = log_hanging_u(n, d, p);
  const LogWeights w(d, p);
  std::vector<double> v(n + 1), vp(n + 1);
  vp[0] = 0.0;
  v[0] = w.log_c;
  for (std::size_t m = 1; m <= n; ++m) {
    double sum_v = log_mul(w.log_h, v[m - 1]);
    double sum_vp = log_mul(w.log_h, vp[m - 1]);
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      const double inner = log_mul(log_scaled(static_cast<double>(k), w.log_q),
                                   2.0 * w.log_c + w.log_h + u[k - 1]);
      sum_v = log_add(sum_v, log_mul(inner, v[m - 1 - k]));
      sum_vp = log_add(sum_vp, log_mul(inner, vp[m - 1 - k]));
    }
    const double qn = log_scaled(static_cast<double>(m), w.log_q);
    vp[m] = log_add(sum_vp, log_mul(qn, w.log_c + v[m - 1]));
    v[m] = log_add(sum_v, log_mul(qn, w.log_c + vp[m]));
  }
  std::vector<std::pair<double, double>> out;
  for (std::size_t m = 0; m <= n; ++m) out.emplace_back(v[m], vp[m]);
  return out;
}

double log_attached_w(std::size_t L, double d, double p) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("L must be even and positive");
  const std::size_t half = L / 2;
  const LogWeights w(d, p);
  const auto v = log_boundary_v(half, d, p);
  double sum = kNegInf;
  for (std::size_t k = 0; k < half; ++k) {
    const long right = static_cast<long>(half) - static_cast<long>(k) - 2;
    const double v_right = right < 0 ? std::log(d) : v[static_cast<std::size_t>(right)].first;
    sum = log_add(sum, log_mul(log_scaled(static_cast<double>(k), w.log_q),
                               w.log_c + v[k].second + w.log_h + v_right));
  }
  return sum;
}

double log_z_bb_large_t(std::size_t L, double d, double p) {
  if (p <= 0.0) throw std::domain_error("Z_bb diverges without noise");
  const double keep_l = log_scaled(static_cast<double>(L), log_keep(p));
  // log(1 - (1-p)^L)
  const double denom = keep_l == kNegInf ? 0.0 : std::log(-std::expm1(keep_l));
  return log_attached_w(L, d, p) - denom;
}

std::vector<double> log_u_finite_t(std::size_t n, std::size_t t, double d, double p) {
  require_d(d);
  require_p(p);
  const double log_d = std::log(d);
  const double log_p = p > 0.0 ? std::log(p) : kNegInf;
  const double lk = log_keep(p);
  std::vector<double> prev(n + 1, 2.0 * log_d);
  if (t == 0) return prev;
  std::vector<double> cur(n + 1);
  for (std::size_t layer = 1; layer <= t; ++layer) {
    cur[0] = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      double sum = log_mul(log_p - 2.0 * log_d, cur[k - 1]);
      for (std::size_t j = 1; j + 1 <= k; ++j) {
        const double term = log_mul(log_p - 4.0 * log_d,
                                    log_mul(log_scaled(static_cast<double>(j), lk),
                                            prev[j - 1] + cur[k - 1 - j]));
        sum = log_add(sum, term);
      }
      sum = log_add(sum, log_mul(log_scaled(static_cast<double>(k), lk) - 2.0 * log_d, prev[k - 1]));
      cur[k] = sum;
    }
    std::swap(prev, cur);
  }
  return prev;
}

double log_u_finite_t_single(std::size_t n, std::size_t t, double d, double p) {
  return log_u_finite_t(n, t, d, p)[n];
}

double log_area_law_ratio(std::size_t L, std::size_t t, double d, double p) {
  if (L == 0 || L % 4 != 0) throw std::invalid_argument("L must be a positive multiple of 4");
  const auto u = log_u_finite_t(L / 2, t, d, p);
  return u[0] + u[L / 2] - 2.0 * u[L / 4];
}

double area_law_ratio(std::size_t L, std::size_t t, double d, double p) {
  return std::exp(log_area_law_ratio(L, t, d, p));
}

double thermalization_time(double d, double p) {
  require_d(d);
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("t* needs 0 < p < 1");
  return std::log(d) / -std::log1p(-p);
}

}  // namespace chanent::domainwall
