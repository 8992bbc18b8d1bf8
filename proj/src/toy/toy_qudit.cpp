#include "chanent/toy/toy_qudit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chanent/circuit/clifford_sampler.h"
#include "chanent/common/rng.h"
#include "chanent/stabilizer/mixed_state.h"

namespace chanent::toy {

namespace {

double survive(const ToyParams& params) {
  return std::pow(1.0 - params.p, static_cast<double>(params.t));
}

void require_renyi(const ToyParams& params) {
  if (!(params.n > 1.0)) throw std::invalid_argument("Renyi index must exceed 1");
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

void ToyParams::validate() const {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

ToySpectrum channel_spectrum(const ToyParams& params) {
  params.validate();
  const double s = survive(params);
  const double rest = (1.0 - s) / params.d;
  return {s + rest, rest};
}

double renyi_channel_setup(const ToyParams& params) {
  require_renyi(params);
  const auto spec = channel_spectrum(params);
  // sum_i lambda_i^n - 1 = sum_i lambda_i (lambda_i^{n-1} - 1), stable as n -> 1.
  auto excess = [&](double lambda) {
    return lambda > 0.0 ? lambda * std::expm1((params.n - 1.0) * std::log(lambda)) : 0.0;
  };
  const double sum = excess(spec.top) + (params.d - 1) * excess(spec.rest);
  return std::log1p(sum) / (1.0 - params.n);
}

double vn_channel_setup(const ToyParams& params) {
  const auto spec = channel_spectrum(params);
  return -xlogx(spec.top) - (params.d - 1) * xlogx(spec.rest);
}

double renyi_channel_setup_large_d(const ToyParams& params) {
  require_renyi(params);
  params.validate();
  return params.n * static_cast<double>(params.t) * std::log1p(-params.p) / (1.0 - params.n);
}

double vn_channel_setup_large_d(const ToyParams& params) {
  params.validate();
  const double s = survive(params);
  return (1.0 - s) * std::log(static_cast<double>(params.d)) - xlogx(s) - xlogx(1.0 - s);
}

TrajectoryEntropies trajectory_setup_entropies(const ToyParams& params) {
  require_renyi(params);
  params.validate();
  const double s = survive(params);
  TrajectoryEntropies out;
  out.quenched = (1.0 - s) * std::log(static_cast<double>(params.d));
  out.annealed = std::log(s + (1.0 - s) * std::pow(params.d, 1.0 - params.n)) / (1.0 - params.n);
  return out;
}

double annealed_large_d(const ToyParams& params) {
  require_renyi(params);
  params.validate();
  return static_cast<double>(params.t) * std::log1p(-params.p) / (1.0 - params.n);
}

McEstimate trajectory_monte_carlo(const ToyParams& params, std::size_t n_traj, std::uint64_t seed) {
  params.validate();
  if (n_traj < 2) throw std::invalid_argument("need at least two trajectories");
  const double log_d = std::log(static_cast<double>(params.d));
  const std::uint64_t key = derive_stream_key(seed, 0);
  const std::vector<std::size_t> site{0};
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n_traj; ++i) {
    auto state = stabilizer::MixedStabilizerState::product_state(1, params.d);
    CounterRng rng(key, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32), 0);
    for (std::size_t step = 0; step < params.t; ++step) {
      state.apply(circuit::sample_random_clifford(params.d, 1, rng), site);
      if (rng.bernoulli(params.p)) state.apply_trace(site);
    }
    const double s = static_cast<double>(state.total_entropy_dits()) * log_d;
    sum += s;
    sum_sq += s * s;
  }
  const double n = static_cast<double>(n_traj);
  McEstimate out;
  out.samples = n_traj;
  out.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * out.mean * out.mean) / (n - 1.0));
  out.stderr_ = std::sqrt(var / n);
  return out;
}

}  // namespace chanent::toy
