#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "chanent/circuit/architecture.h"
#include "chanent/common/rational.h"
#include "chanent/oracle/dense_state.h"
#include "chanent/replica/lattice.h"

namespace chanent::oracle {

// Permutation placed on the top of the two-copy operator. The first letter is
// the spin over region A, the second over its complement B (a = identity,
// b = swap), so bb gives tr rho^2, ba gives tr rho_A^2 and ab gives tr rho_B^2.
enum class TopBoundary { kBB, kBA, kAB };
std::string to_string(TopBoundary top);
TopBoundary parse_top_boundary(const std::string& text);

// Sites carrying the swap for a given top boundary.
Region swap_region(TopBoundary top, const Region& a);

struct TwirlOptions {
  replica::BottomBoundary bottom = replica::BottomBoundary::kProductState;
  std::size_t budget = std::size_t{1} << 22;  // entries of the two-copy operator
};

// Exact E[tr(P_top rho (x) rho)] for `depth` layers of depolarizing blocks with
// Haar unitaries. The two-copy operator is pushed through the averaged block
// channel sum_{g1,g2 in S_2} (1-p)^{2-n} D^-2 V_2(g1,g2) |g1><g2|. Only two-site
// blocks are supported. Throws std::length_error past the budget.
double two_copy_twirl_average(const circuit::Architecture& arch, std::size_t depth, int d,
                              const Rational& p, TopBoundary top, const Region& a,
                              const TwirlOptions& options = {});

using Observable = std::function<double(const DenseState&)>;

// tr rho_X^2 with X the swap region of `top`.
Observable purity_observable(TopBoundary top, const Region& a);

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

struct MonteCarloOptions {
  replica::BottomBoundary bottom = replica::BottomBoundary::kProductState;
  unsigned workers = 1;
};

// Plain Monte Carlo over Haar circuits with depolarizing blocks. Sample i draws
// from its own substream of `seed`, so the estimate does not depend on the
// worker count.
MonteCarloEstimate mc_replica_average(const circuit::Architecture& arch, std::size_t depth, int d,
                                      double p, const Observable& observable, std::size_t n_samples,
                                      std::uint64_t seed, const MonteCarloOptions& options = {});

// One Haar circuit realization (sample index `sample` of `seed`).
DenseState sample_haar_circuit(const circuit::Architecture& arch, std::size_t depth, int d,
                               double p, std::uint64_t seed, std::uint64_t sample,
                               replica::BottomBoundary bottom);

}  // namespace chanent::oracle
