#pragma once

#include <cstddef>
#include <cstdint>

namespace chanent::toy {

// One qudit of dimension d under t steps of noise with strength p. Entropies
// are in nats.
struct ToyParams {
  int d = 2;
  double p = 0.0;
  std::size_t t = 0;
  double n = 2.0;  // Renyi index

  void validate() const;
};

// Spectrum after t applications of (1-p) U . U^dag + p I/d to a pure state:
// one eigenvalue (1-p)^t + (1-(1-p)^t)/d and d-1 copies of (1-(1-p)^t)/d.
struct ToySpectrum {
  double top = 1.0;
  double rest = 0.0;
};
ToySpectrum channel_spectrum(const ToyParams& params);

double renyi_channel_setup(const ToyParams& params);
double vn_channel_setup(const ToyParams& params);

// Leading large-d forms: n t log(1-p) / (1-n) for Renyi, and
// [1-(1-p)^t] log d - (1-p)^t log (1-p)^t - [1-(1-p)^t] log[1-(1-p)^t] for von Neumann.
double renyi_channel_setup_large_d(const ToyParams& params);
double vn_channel_setup_large_d(const ToyParams& params);

// Trace applied with probability p per step: the qudit is pure with
// probability (1-p)^t and maximally mixed otherwise.
struct TrajectoryEntropies {
  double quenched = 0.0;  // average of the entropy, [1-(1-p)^t] log d
  double annealed = 0.0;  // log of the averaged tr rho^n, divided by 1-n
};
TrajectoryEntropies trajectory_setup_entropies(const ToyParams& params);
double annealed_large_d(const ToyParams& params);

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

// Runs the probabilistic setup with random single-qudit Cliffords on the
// stabilizer simulator and averages the entropy (nats).
McEstimate trajectory_monte_carlo(const ToyParams& params, std::size_t n_traj, std::uint64_t seed);

}  // namespace chanent::toy
