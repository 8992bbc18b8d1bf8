#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chanent/common/rational.h"

namespace chanent::domainwall {

// Large-d domain-wall sums for Q = 2. Logarithms are natural; divide by
// log(d) to express an entropy in dits.
struct WallParams {
  double d = 2.0;
  double p = 0.0;
  std::size_t L = 0;
  std::size_t t = 0;

  void validate() const;
};

// ---- small t -------------------------------------------------------------

// log Z_bb ~ (Q L t / 2) log(1 - p); Q = 2 gives L t log(1 - p).
double log_z_bb_small_t(const WallParams& params, std::size_t q = 2);

// log Z_ab ~ log[(2/d)^t (1-p)^{Lt/2} prod_i ((1-p)^{-i} + (1-p)^i) / 2].
double log_z_ab_small_t(const WallParams& params);

// Renyi-2 mutual information for t = 0..params.t. With d2_corrected the
// vertical wall weight 1/d is replaced by its exact value d / (d^2 + 1).
std::vector<double> mutual_info_small_t(const WallParams& params, bool d2_corrected = false);

// Operator entanglement, 2 log(d/2) t (or 2 log((d^2+1)/(2d)) t), t = 0..params.t.
std::vector<double> op_ee_small_t(const WallParams& params, bool d2_corrected = false);

// Total Renyi-2 entropy, L log(1/(1-p)) t, t = 0..params.t.
std::vector<double> s2_total_small_t(const WallParams& params);

// Slope of the vertical-wall term: log(d/2) or log((d^2+1)/(2d)).
double vertical_wall_log_weight(double d, bool d2_corrected);

// ---- large t, exact rational recursions ---------------------------------

// u_0..u_n from the hanging-wall recursion with u_0 = 1 (equals d^{-2k}).
std::vector<Rational> hanging_u(std::size_t n, const Rational& d, const Rational& p);

// (v_k, v'_k) for k = 0..n with v'_0 = 1 and v_0 = v'_0 / d.
std::vector<std::pair<Rational, Rational>> boundary_v(std::size_t n, const Rational& d,
                                                      const Rational& p);

// Sum over walls attached to the top boundary at least once.
Rational attached_w(std::size_t L, const Rational& d, const Rational& p);

// Z_bb = sum_k (1-p)^{kL} w. Throws std::domain_error for p = 0.
Rational z_bb_large_t(std::size_t L, const Rational& d, const Rational& p);

// Z_ba from the boundary chain: v'_{|A|/2} for even |A|, v_{(|A|-1)/2} otherwise.
Rational z_ba_large_t(std::size_t a_size, const Rational& d, const Rational& p);

// ---- the same recursions in log space --------------------------------------

std::vector<double> log_hanging_u(std::size_t n, double d, double p);
std::vector<std::pair<double, double>> log_boundary_v(std::size_t n, double d, double p);
double log_attached_w(std::size_t L, double d, double p);
double log_z_bb_large_t(std::size_t L, double d, double p);

// ---- finite depth --------------------------------------------------------

// log u_k(t) for k = 0..n at depth t, from
//   u_k(t) = p/d^2 u_{k-1}(t) + p/d^4 sum_j (1-p)^j u_{j-1}(t-1) u_{k-1-j}(t)
//            + (1-p)^k/d^2 u_{k-1}(t-1),
// with u_k(0) = d^2 and u_0(t >= 1) = 1.
std::vector<double> log_u_finite_t(std::size_t n, std::size_t t, double d, double p);
double log_u_finite_t_single(std::size_t n, std::size_t t, double d, double p);

// u_0(t) u_{L/2}(t) / u_{L/4}(t)^2. Requires L divisible by 4.
double area_law_ratio(std::size_t L, std::size_t t, double d, double p);
double log_area_law_ratio(std::size_t L, std::size_t t, double d, double p);

// t* = log d / (-log(1-p)). Throws std::domain_error for p outside (0, 1).
double thermalization_time(double d, double p);

}  // namespace chanent::domainwall
