#include <gtest/gtest.h>

#include <cmath>

#include "chanent/toy/toy_qudit.h"

namespace chanent::toy {
namespace {

TEST(ChannelSetup, Examples) {
  EXPECT_NEAR(renyi_channel_setup({3, 0.4, 0, 2.0}), 0.0, 1e-15);
  EXPECT_NEAR(vn_channel_setup({3, 0.4, 0, 2.0}), 0.0, 1e-15);
  EXPECT_NEAR(renyi_channel_setup({3, 0.4, 200, 2.0}), std::log(3.0), 1e-12);
  EXPECT_NEAR(vn_channel_setup({5, 1.0, 1, 2.0}), std::log(5.0), 1e-14);
  // Eigenvalues 3/4 and 1/4.
  const double h = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
  EXPECT_NEAR(vn_channel_setup({2, 0.5, 1, 2.0}), h, 1e-14);
  EXPECT_NEAR(h, 0.5623, 1e-4);
  EXPECT_THROW(renyi_channel_setup({2, 0.5, 1, 1.0}), std::invalid_argument);
  EXPECT_THROW(vn_channel_setup({1, 0.5, 1, 2.0}), std::invalid_argument);
}

TEST(ChannelSetup, LargeDLimits) {
  const int d = 100000000;
  for (double n : {2.0, 3.0}) {
    const ToyParams params{d, 0.3, 3, n};
    EXPECT_NEAR(renyi_channel_setup(params), renyi_channel_setup_large_d(params), 1e-5);
  }
  const ToyParams params{d, 0.3, 3, 2.0};
  EXPECT_NEAR(vn_channel_setup(params), vn_channel_setup_large_d(params), 1e-5);
}

TEST(ChannelSetup, MonotoneAndBounded) {
  for (int d : {2, 3, 7}) {
    for (double n : {1.5, 2.0, 4.0}) {
      double previous_t = -1.0;
      for (std::size_t t = 0; t <= 30; ++t) {
        const double s = renyi_channel_setup({d, 0.2, t, n});
        EXPECT_GE(s, previous_t - 1e-14);
        EXPECT_LE(s, std::log(d) + 1e-14);
        previous_t = s;
      }
      double previous_p = -1.0;
      for (double p = 0.0; p <= 1.0; p += 0.05) {
        const double s = renyi_channel_setup({d, p, 4, n});
        EXPECT_GE(s, previous_p - 1e-14);
        previous_p = s;
      }
    }
  }
}

TEST(ChannelSetup, RenyiApproachesVonNeumannLinearly) {
  for (int d : {2, 5}) {
    const ToyParams base{d, 0.25, 3, 2.0};
    const double vn = vn_channel_setup(base);
    ToyParams a = base, b = base;
    a.n = 1 + 1e-3;
    b.n = 1 + 1e-5;
    const double err_a = std::abs(renyi_channel_setup(a) - vn);
    const double err_b = std::abs(renyi_channel_setup(b) - vn);
    EXPECT_LT(err_a, 1e-2);
    EXPECT_LT(err_b, 1e-4);
    // First-order convergence: shrinking eps by 100 shrinks the error ~100x.
    EXPECT_NEAR(err_a / err_b, 100.0, 5.0);
  }
}

TEST(TrajectorySetup, QuenchedAndAnnealed) {
  const auto full = trajectory_setup_entropies({4, 1.0, 1, 2.0});
  EXPECT_NEAR(full.quenched, std::log(4.0), 1e-14);
  EXPECT_NEAR(full.annealed, std::log(4.0), 1e-14);
  const auto start = trajectory_setup_entropies({4, 0.3, 0, 2.0});
  EXPECT_EQ(start.quenched, 0.0);
  EXPECT_NEAR(start.annealed, 0.0, 1e-15);

  const ToyParams big{1000000000, 0.3, 4, 3.0};
  EXPECT_NEAR(trajectory_setup_entropies(big).annealed, annealed_large_d(big), 1e-6);
  // The annealed large-d value lacks the factor n of the channel setup.
  EXPECT_NEAR(renyi_channel_setup_large_d(big), 3.0 * annealed_large_d(big), 1e-12);

  for (int d : {2, 3}) {
    double previous_gap = 1e9;
    for (double p : {0.1, 0.5}) {
      EXPECT_GT(std::abs(trajectory_setup_entropies({d, p, 2, 2.0}).quenched -
                         trajectory_setup_entropies({d, p, 2, 2.0}).annealed),
                0.0);
    }
    // The gap vanishes at both p = 0 and p = 1; check the approach to p = 1.
    for (double p : {0.9, 0.99, 0.9999}) {
      const auto e = trajectory_setup_entropies({d, p, 2, 2.0});
      const double gap = std::abs(e.quenched - e.annealed);
      EXPECT_GT(gap, 0.0);
      EXPECT_LT(gap, previous_gap);
      previous_gap = gap;
    }
    EXPECT_LT(previous_gap, 1e-6);
  }
}

TEST(TrajectorySetup, StabilizerMonteCarloMatchesQuenched) {
  for (int d : {2, 3}) {
    const ToyParams params{d, 0.3, 3, 2.0};
    const auto mc = trajectory_monte_carlo(params, 100000, 77 + d);
    const double exact = trajectory_setup_entropies(params).quenched;
    EXPECT_LT(std::abs(mc.mean - exact), 4 * mc.stderr_) << "d=" << d;
    EXPECT_GT(mc.stderr_, 0.0);
  }
}

}  // namespace
}  // namespace chanent::toy
