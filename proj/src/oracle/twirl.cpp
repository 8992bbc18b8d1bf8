#include "chanent/oracle/twirl.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chanent/common/parallel.h"
#include "chanent/common/rng.h"
#include "chanent/replica/weights.h"

namespace chanent::oracle {

namespace {

using RealMatrix = Eigen::MatrixXd;

void require_two_site_bulk(const circuit::Architecture& arch) {
  arch.validate();
  if (arch.kind == circuit::ArchitectureKind::kBoundaryNoise1D) {
    throw std::invalid_argument("boundary-noise chains have no per-block channel");
  }
  if (arch.arity() != 2) throw std::invalid_argument("only two-site blocks are supported");
}

// Index tables for splitting a 2L-digit basis index into (block digits, rest).
struct TwoCopySplit {
  std::size_t block_dim = 1;
  std::size_t rest_dim = 1;
  std::vector<std::size_t> index;  // index[b * rest_dim + r]

  std::size_t at(std::size_t b, std::size_t r) const { return index[b * rest_dim + r]; }
};

TwoCopySplit split_digits(std::size_t n_digits, int d, const std::vector<std::size_t>& block) {
  std::vector<std::size_t> power(n_digits, 1);
  for (std::size_t s = 1; s < n_digits; ++s) power[s] = power[s - 1] * static_cast<std::size_t>(d);
  std::vector<bool> in_block(n_digits, false);
  for (std::size_t s : block) in_block[s] = true;
  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < n_digits; ++s) {
    if (!in_block[s]) rest.push_back(s);
  }
  auto place = [&](std::size_t value, const std::vector<std::size_t>& sites) {
    std::size_t full = 0;
    for (std::size_t s : sites) {
      full += (value % static_cast<std::size_t>(d)) * power[s];
      value /= static_cast<std::size_t>(d);
    }
    return full;
  };
  TwoCopySplit out;
  for (std::size_t i = 0; i < block.size(); ++i) out.block_dim *= static_cast<std::size_t>(d);
  for (std::size_t i = 0; i < rest.size(); ++i) out.rest_dim *= static_cast<std::size_t>(d);
  out.index.resize(out.block_dim * out.rest_dim);
  for (std::size_t b = 0; b < out.block_dim; ++b) {
    const std::size_t base = place(b, block);
    for (std::size_t r = 0; r < out.rest_dim; ++r) out.index[b * out.rest_dim + r] = base + place(r, rest);
  }
  return out;
}

}  // namespace

std::string to_string(TopBoundary top) {
  switch (top) {
    case TopBoundary::kBB:
      return "bb";
    case TopBoundary::kBA:
      return "ba";
    case TopBoundary::kAB:
      return "ab";
  }
  return "?";
}

TopBoundary parse_top_boundary(const std::string& text) {
  if (text == "bb") return TopBoundary::kBB;
  if (text == "ba") return TopBoundary::kBA;
  if (text == "ab") return TopBoundary::kAB;
  throw std::invalid_argument("unknown top boundary: " + text);
}

Region swap_region(TopBoundary top, const Region& a) {
  switch (top) {
    case TopBoundary::kBB:
      return Region::all(a.system_size());
    case TopBoundary::kBA:
      return a;
    case TopBoundary::kAB:
      return a.complement();
  }
  throw std::invalid_argument("bad top boundary");
}

double two_copy_twirl_average(const circuit::Architecture& arch, std::size_t depth, int d,
                              const Rational& p, TopBoundary top, const Region& a,
                              const TwirlOptions& options) {
  require_two_site_bulk(arch);
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t n = arch.sites();
  if (a.system_size() != n) throw std::invalid_argument("region size does not match the circuit");
  const std::size_t digits = 2 * n;
  std::size_t dim = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim * dim > options.budget) throw std::length_error("two-copy operator exceeds the budget");
  }

  // Block channel coefficients c[g1][g2], index 0 = identity, 1 = swap.
  using replica::Perm;
  const Perm id(2), swap = Perm::from_cycles(2, "(1,2)");
  const Perm perms[2] = {id, swap};
  const Rational big_d = Rational(d) * d;
  double coeff[2][2];
  for (int g1 = 0; g1 < 2; ++g1) {
    for (int g2 = 0; g2 < 2; ++g2) {
      const std::size_t common = replica::common_fixed_points(perms[g1], perms[g2]);
      const Rational c = pow(Rational(1) - p, static_cast<long>(2 - common)) / (big_d * big_d) *
                         replica::v_coeff(perms[g1], perms[g2], Rational(d), p, 2);
      coeff[g1][g2] = to_double(c);
    }
  }

  const auto dd = static_cast<Eigen::Index>(dim);
  RealMatrix x = RealMatrix::Zero(dd, dd);
  if (options.bottom == replica::BottomBoundary::kProductState) {
    x(0, 0) = 1.0;
  } else {
    x = RealMatrix::Identity(dd, dd) / static_cast<double>(dim);
  }

  for (std::size_t layer = 1; layer <= depth; ++layer) {
    for (const auto& block : arch.layer_blocks(layer)) {
      const std::vector<std::size_t> block_digits{block[0], block[1], block[0] + n, block[1] + n};
      const TwoCopySplit split = split_digits(digits, d, block_digits);
      const std::size_t bd = split.block_dim, rd = split.rest_dim;
      const std::size_t half = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
      auto swapped = [&](std::size_t b) { return (b % half) * half + b / half; };

      RealMatrix r_id = RealMatrix::Zero(rd, rd), r_swap = RealMatrix::Zero(rd, rd);
      for (std::size_t r = 0; r < rd; ++r) {
        for (std::size_t c = 0; c < rd; ++c) {
          double s_id = 0.0, s_swap = 0.0;
          for (std::size_t b = 0; b < bd; ++b) {
            s_id += x(split.at(b, r), split.at(b, c));
            s_swap += x(split.at(swapped(b), r), split.at(b, c));
          }
          r_id(r, c) = s_id;
          r_swap(r, c) = s_swap;
        }
      }
      const RealMatrix m_id = coeff[0][0] * r_id + coeff[0][1] * r_swap;
      const RealMatrix m_swap = coeff[1][0] * r_id + coeff[1][1] * r_swap;
      x.setZero();
      for (std::size_t b = 0; b < bd; ++b) {
        const std::size_t bs = swapped(b);
        for (std::size_t r = 0; r < rd; ++r) {
          for (std::size_t c = 0; c < rd; ++c) {
            x(split.at(b, r), split.at(b, c)) += m_id(r, c);
            x(split.at(b, r), split.at(bs, c)) += m_swap(r, c);
          }
        }
      }
    }
  }

  // tr(P X) = sum_c X(pi(c), c) with pi swapping the copies on the swap region.
  const Region swaps = swap_region(top, a);
  std::vector<std::size_t> power(digits, 1);
  for (std::size_t s = 1; s < digits; ++s) power[s] = power[s - 1] * static_cast<std::size_t>(d);
  double total = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t image = c;
    for (std::size_t s : swaps.sites()) {
      const std::size_t lo = (c / power[s]) % static_cast<std::size_t>(d);
      const std::size_t hi = (c / power[s + n]) % static_cast<std::size_t>(d);
      image = image - lo * power[s] - hi * power[s + n] + hi * power[s] + lo * power[s + n];
    }
    total += x(static_cast<Eigen::Index>(image), static_cast<Eigen::Index>(c));
  }
  return total;
}

Observable purity_observable(TopBoundary top, const Region& a) {
  const Region region = swap_region(top, a);
  return [region](const DenseState& state) {
    if (region.size() == state.size()) return state.purity();
    const Matrix reduced = state.reduced(region);
    return (reduced * reduced).trace().real();
  };
}

DenseState sample_haar_circuit(const circuit::Architecture& arch, std::size_t depth, int d,
                               double p, std::uint64_t seed, std::uint64_t sample,
                               replica::BottomBoundary bottom) {
  arch.validate();
  if (arch.kind == circuit::ArchitectureKind::kBoundaryNoise1D) {
    throw std::invalid_argument("boundary-noise chains have no per-block channel");
  }
  const std::size_t n = arch.sites();
  DenseState state = bottom == replica::BottomBoundary::kProductState
                         ? DenseState::product_state(n, d)
                         : DenseState::maximally_mixed(n, d);
  std::size_t block_dim = 1;
  for (std::size_t i = 0; i < arch.arity(); ++i) block_dim *= static_cast<std::size_t>(d);
  CounterRng rng(derive_stream_key(seed, 1), static_cast<std::uint32_t>(sample),
                 static_cast<std::uint32_t>(sample >> 32), 0);
  for (std::size_t layer = 1; layer <= depth; ++layer) {
    for (const auto& block : arch.layer_blocks(layer)) {
      const Matrix u = haar_unitary(block_dim, rng);
      state.apply_depolarizing(block, p, u);
    }
  }
  return state;
}

MonteCarloEstimate mc_replica_average(const circuit::Architecture& arch, std::size_t depth, int d,
                                      double p, const Observable& observable, std::size_t n_samples,
                                      std::uint64_t seed, const MonteCarloOptions& options) {
  if (n_samples == 0) throw std::invalid_argument("need at least one sample");
  std::vector<double> values(n_samples);
  parallel_for(n_samples, options.workers, [&](std::size_t i) {
    values[i] = observable(sample_haar_circuit(arch, depth, d, p, seed, i, options.bottom));
  });
  MonteCarloEstimate out;
  out.samples = n_samples;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(n_samples);
  if (n_samples > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - out.mean) * (v - out.mean);
    const double var = sq / static_cast<double>(n_samples - 1);
    out.stderr_ = std::sqrt(var / static_cast<double>(n_samples));
  }
  return out;
}

}  // namespace chanent::oracle
