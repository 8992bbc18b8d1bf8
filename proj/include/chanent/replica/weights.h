#pragma once

#include <cstddef>
#include <span>

#include "chanent/common/rational.h"
#include "chanent/replica/perm.h"

namespace chanent::replica {

// Coefficient of |g1><g2| in the averaged Q-fold channel of one block of
// `arity` sites with local dimension d, normalized so that
//   E[Phi^{(x)Q}] = sum (1-p)^{Q-n} D^{-Q} V_Q(g1, g2) |g1><g2|,  D = d^arity.
// V_Q = sum_i C(n,i) (1-p)^{n-i} p^i D^{Q-i} W_{Q-i}(g1^-1 g2), n the number
// of common fixed points; W_{Q-i} sees g1^-1 g2 with i of those points removed.
Rational v_coeff(const Perm& g1, const Perm& g2, const Rational& d, const Rational& p,
                 std::size_t arity = 2);

// Weight of one depolarizing block with lower spin `a` whose output legs meet
// the spins `up` (one per leg), after summing out the block's upper spin:
//   (1-p)^{Q-n_a} K_p(a, up) with
//   K_p = sum_tau prod_j d^{-|tau^-1 up_j|} (1-p)^{n_a-n_{tau,a}} V_Q(tau, a).
Rational block_weight_depolarizing(const Perm& a, std::span<const Perm> up, const Rational& d,
                                   const Rational& p);
Rational triangle_weight_depolarizing(const Perm& a, const Perm& b, const Perm& c,
                                      const Rational& d, const Rational& p);

// Leading large-d form of the same weight: only upper spins on a geodesic
// between a and every up_j survive, each with the Moebius coefficient.
double block_weight_large_d(const Perm& a, std::span<const Perm> up, double d, double p);
double triangle_weight_large_d(const Perm& a, const Perm& b, const Perm& c, double d, double p);

// Unitary-only weight J_0(a, up) = sum_tau D^Q prod_j d^{-|tau^-1 up_j|} W_Q(tau^-1 a).
Rational block_weight_unitary(const Perm& a, std::span<const Perm> up, const Rational& d);

// Block where the whole block is traced out with probability p:
//   J_p = p prod_j d^{-|up_j|} [a == id] + (1-p) J_0.
Rational block_weight_probabilistic(const Perm& a, std::span<const Perm> up, const Rational& d,
                                    const Rational& p);
Rational triangle_weight_probabilistic(const Perm& a, const Perm& b, const Perm& c,
                                       const Rational& d, const Rational& p);

Rational binomial(std::size_t n, std::size_t k);

}  // namespace chanent::replica
