#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chanent/circuit/architecture.h"
#include "chanent/circuit/clifford_sampler.h"
#include "chanent/oracle/dense_state.h"
#include "chanent/oracle/twirl.h"
#include "chanent/replica/lattice.h"

namespace chanent::oracle {
namespace {

const double kLog2 = std::log(2.0);

Matrix random_density(std::size_t dim, std::size_t rank, CounterRng& rng) {
  Matrix g(dim, rank);
  for (std::size_t c = 0; c < rank; ++c) {
    for (std::size_t r = 0; r < dim; ++r) g(r, c) = Complex(rng.normal(), rng.normal());
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

DenseState bell_pair() {
  auto state = DenseState::product_state(2, 2);
  const std::vector<std::size_t> first{0}, both{0, 1};
  state.apply_unitary(clifford_unitary(stabilizer::CliffordGate::fourier(2)), first);
  state.apply_unitary(clifford_unitary(stabilizer::CliffordGate::sum(2)), both);
  return state;
}

TEST(DenseState, ChannelExamples) {
  const std::vector<std::size_t> block{0, 1};
  const Matrix id4 = Matrix::Identity(4, 4);

  auto mixed = DenseState::product_state(2, 2);
  mixed.apply_depolarizing(block, 0.5, id4);
  // Eigenvalues 1/2 + 1/8 and three times 1/8.
  EXPECT_NEAR(mixed.purity(), 0.625 * 0.625 + 3 * 0.125 * 0.125, 1e-15);
  EXPECT_NEAR(mixed.purity(), 7.0 / 16.0, 1e-15);

  // p = 1 leaves the block maximally mixed and uncorrelated with the rest.
  CounterRng rng(derive_stream_key(5, 0));
  auto state = DenseState::from_matrix(3, 2, random_density(8, 3, rng));
  const Matrix rest_before = state.reduced(Region(3, {2}));
  state.apply_depolarizing(block, 1.0, haar_unitary(4, rng));
  EXPECT_LT((state.reduced(Region(3, {0, 1})) - id4 / 4.0).norm(), 1e-14);
  EXPECT_LT((state.reduced(Region(3, {2})) - rest_before).norm(), 1e-14);
  EXPECT_NEAR(renyi_mutual(state, Region(3, {0, 1}), Region(3, {2}), 2), 0.0, 1e-12);

  // p = 0 is unitary conjugation.
  auto a = DenseState::from_matrix(2, 3, random_density(9, 2, rng));
  const Matrix u = haar_unitary(9, rng);
  const Matrix expected = u * a.matrix() * u.adjoint();
  a.apply_depolarizing(block, 0.0, u);
  EXPECT_LT((a.matrix() - expected).norm(), 1e-12);
  a.check_invariants();
}

TEST(DenseState, PositivityAfterChannelSequences) {
  CounterRng rng(derive_stream_key(9, 0));
  auto state = DenseState::product_state(4, 2);
  const auto arch = circuit::Architecture::brickwork(4, true);
  for (std::size_t layer = 1; layer <= 6; ++layer) {
    for (const auto& block : arch.layer_blocks(layer)) {
      state.apply_depolarizing(block, rng.uniform(), haar_unitary(4, rng));
      EXPECT_NO_THROW(state.check_invariants());
    }
  }
  EXPECT_THROW(DenseState::from_matrix(1, 2, Matrix::Identity(2, 2)), std::logic_error);
}

TEST(HaarUnitary, UnitarityAndMoments) {
  CounterRng rng(derive_stream_key(11, 0));
  for (std::size_t dim : {1u, 2u, 4u, 9u}) {
    const Matrix u = haar_unitary(dim, rng);
    EXPECT_LT((u * u.adjoint() - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
  }
  const std::size_t dim = 4, samples = 10000;
  // A fixed unitary applied on the left must not change the statistics.
  const Matrix v = haar_unitary(dim, rng);
  double m1 = 0, m1_sq = 0, tr = 0, tr_sq = 0, left = 0, left_sq = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Matrix u = haar_unitary(dim, rng);
    const double a = std::norm(u(0, 0));
    const double b = std::norm(u.trace());
    const double c = std::norm((v * u).trace());
    m1 += a, m1_sq += a * a, tr += b, tr_sq += b * b, left += c, left_sq += c * c;
  }
  auto check = [&](double sum, double sum_sq, double expected) {
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double err = std::sqrt((sum_sq / n - mean * mean) / n);
    EXPECT_LT(std::abs(mean - expected), 3 * err) << "mean " << mean << " expected " << expected;
  };
  check(m1, m1_sq, 1.0 / dim);
  check(tr, tr_sq, 1.0);
  check(left, left_sq, 1.0);
}

TEST(Measures, BellPairAndMaximallyMixed) {
  const auto bell = bell_pair();
  const Region a(2, {0}), b(2, {1});
  EXPECT_NEAR(renyi_mutual(bell, a, b, 2), 2 * kLog2, 1e-12);
  EXPECT_NEAR(renyi_mutual(bell, a, b, 1), 2 * kLog2, 1e-12);
  EXPECT_NEAR(log_negativity(bell, a), kLog2, 1e-12);
  EXPECT_NEAR(op_ee(bell, a, 2), 2 * kLog2, 1e-12);
  // Partial transpose spectrum {1/2, 1/2, 1/2, -1/2}.
  EXPECT_NEAR(renyi_negativity(bell, a, 4), std::log(4.0), 1e-12);
  EXPECT_NEAR(renyi_negativity(bell, a, 2), 0.0, 1e-12);
  EXPECT_THROW(renyi_negativity(bell, a, 3), std::invalid_argument);

  const auto mixed = DenseState::maximally_mixed(2, 2);
  EXPECT_NEAR(renyi_mutual(mixed, a, b, 2), 0.0, 1e-12);
  EXPECT_NEAR(log_negativity(mixed, a), 0.0, 1e-12);
  EXPECT_NEAR(op_ee(mixed, a, 2), 0.0, 1e-12);
  EXPECT_NEAR(renyi_negativity(mixed, a, 2), 0.0, 1e-12);
}

TEST(Measures, SeparableMixturesArePpt) {
  CounterRng rng(derive_stream_key(13, 0));
  for (int trial = 0; trial < 5; ++trial) {
    Matrix rho = Matrix::Zero(9, 9);
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double w = rng.uniform() + 0.1;
      total += w;
      // Site 0 is the low digit, so the Kronecker factor for site 1 comes first.
      rho += w * kron(random_density(3, 2, rng), random_density(3, 1, rng));
    }
    const auto state = DenseState::from_matrix(2, 3, rho / total);
    const double ln = log_negativity(state, Region(2, {0}));
    EXPECT_GE(ln, -1e-12);
    EXPECT_NEAR(ln, 0.0, 1e-10);
  }
  // Entangled input has positive negativity.
  EXPECT_GT(log_negativity(bell_pair(), Region(2, {1})), 0.5);
}

TEST(Measures, RenyiMonotoneInIndex) {
  CounterRng rng(derive_stream_key(17, 0));
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho = random_density(8, 1 + trial % 5, rng);
    const double s2 = renyi_entropy(rho, 2), s3 = renyi_entropy(rho, 3), s4 = renyi_entropy(rho, 4);
    EXPECT_GE(renyi_entropy(rho, 1), s2 - 1e-12);
    EXPECT_GE(s2, s3 - 1e-12);
    EXPECT_GE(s3, s4 - 1e-12);
  }
}

TEST(CliffordUnitary, ReproducesConjugationTable) {
  for (int d : {2, 3, 5}) {
    CounterRng rng(derive_stream_key(19, static_cast<std::uint64_t>(d)));
    for (int trial = 0; trial < 10; ++trial) {
      const auto gate = circuit::sample_random_clifford(d, 2, rng);
      const Matrix u = clifford_unitary(gate);
      const std::size_t dim = static_cast<std::size_t>(d * d);
      EXPECT_LT((u * u.adjoint() - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);
      for (std::size_t j = 0; j < 2; ++j) {
        const auto x = pauli::PauliWord::single(2, d, j, 1, 0);
        const auto z = pauli::PauliWord::single(2, d, j, 0, 1);
        EXPECT_LT((u * pauli_matrix(x) * u.adjoint() - pauli_matrix(gate.x_image(j))).norm(), 1e-10);
        EXPECT_LT((u * pauli_matrix(z) * u.adjoint() - pauli_matrix(gate.z_image(j))).norm(), 1e-10);
      }
    }
  }
}

// Random brickwork Clifford circuits with trace channels, run on both engines.
TEST(StabilizerCrossCheck, AllMeasuresAgree) {
  for (int d : {2, 3}) {
    const std::size_t L = 4;
    const auto arch = circuit::Architecture::brickwork(L, d == 2);
    for (int trial = 0; trial < 40; ++trial) {
      CounterRng rng(derive_stream_key(23, static_cast<std::uint64_t>(trial * 10 + d)));
      auto stab = stabilizer::MixedStabilizerState::product_state(L, d);
      auto dense = DenseState::product_state(L, d);
      for (std::size_t layer = 1; layer <= 4; ++layer) {
        for (const auto& block : arch.layer_blocks(layer)) {
          const auto gate = circuit::sample_random_clifford(d, 2, rng);
          stab.apply(gate, block);
          dense.apply_unitary(clifford_unitary(gate), block);
          if (rng.bernoulli(0.15)) {
            stab.apply_trace(block);
            dense.apply_trace(block);
          }
        }
      }
      dense.check_invariants();
      EXPECT_LT((DenseState::from_stabilizer(stab).matrix() - dense.matrix()).norm(), 1e-9);
      const double log_d = std::log(static_cast<double>(d));
      for (std::size_t cut = 1; cut < L; ++cut) {
        const Region a = Region::range(L, 0, cut), b = a.complement();
        const double mi = static_cast<double>(stab.mutual_information_dits(a, b)) * log_d;
        for (double n : {1.0, 2.0, 3.0}) EXPECT_NEAR(renyi_mutual(dense, a, b, n), mi, 1e-9);
        const double opee = static_cast<double>(stab.operator_entanglement_dits(a)) * log_d;
        EXPECT_NEAR(op_ee(dense, a, 2), opee, 1e-9);
        EXPECT_NEAR(op_ee(dense, a, 2), mi, 1e-9);
        if (d == 2) EXPECT_NEAR(log_negativity(dense, a), stab.log_negativity_bits(a) * kLog2, 1e-9);
      }
    }
  }
}

replica::SpinLattice lattice(std::size_t L, std::size_t t, TopBoundary top, const Region& a) {
  auto lat = replica::SpinLattice::from_architecture(circuit::Architecture::brickwork(L, true), t, 2);
  const replica::Perm sw = replica::Perm::from_cycles(2, "(12)"), id(2);
  lat.set_top(swap_region(top, a), sw, id);
  return lat;
}

TEST(Twirl, Examples) {
  const auto arch4 = circuit::Architecture::brickwork(4, true);
  const Region half = Region::range(4, 0, 2);
  EXPECT_NEAR(two_copy_twirl_average(arch4, 0, 2, Rational(3, 10), TopBoundary::kBB, half), 1.0, 1e-14);
  for (int d : {2, 3}) {
    const auto arch2 = circuit::Architecture::brickwork(2, true);
    const Region a(2, {0});
    EXPECT_NEAR(two_copy_twirl_average(arch2, 1, d, 1, TopBoundary::kBB, a), 1.0 / (d * d), 1e-14);
    // Page: a random two-qudit pure state has E tr rho_A^2 = 2d / (d^2 + 1).
    EXPECT_NEAR(two_copy_twirl_average(arch2, 1, d, 0, TopBoundary::kBA, a), 2.0 * d / (d * d + 1), 1e-13);
    EXPECT_NEAR(two_copy_twirl_average(arch2, 1, d, 0, TopBoundary::kBB, a), 1.0, 1e-13);
  }
  TwirlOptions tiny;
  tiny.budget = 1000;
  EXPECT_THROW(two_copy_twirl_average(arch4, 1, 2, 0, TopBoundary::kBB, half, tiny), std::length_error);
}

TEST(Twirl, MatchesSpinModelPartitionFunction) {
  const Region half = Region::range(4, 0, 2);
  for (std::size_t t : {1u, 2u}) {
    for (const Rational& p : {Rational(0), Rational(3, 10)}) {
      for (TopBoundary top : {TopBoundary::kBB, TopBoundary::kBA, TopBoundary::kAB}) {
        const double exact = to_double(replica::brute_force_partition(
            lattice(4, t, top, half), replica::WeightKind::kDepolarizingExact, 2, p));
        const double twirl =
            two_copy_twirl_average(circuit::Architecture::brickwork(4, true), t, 2, p, top, half);
        EXPECT_NEAR(twirl / exact, 1.0, 1e-10) << "t=" << t << " p=" << p << " " << to_string(top);
      }
    }
  }
  // Maximally mixed input.
  auto lat = lattice(4, 2, TopBoundary::kBA, half);
  lat.set_bottom(replica::BottomBoundary::kMaximallyMixed);
  TwirlOptions mixed;
  mixed.bottom = replica::BottomBoundary::kMaximallyMixed;
  EXPECT_NEAR(two_copy_twirl_average(circuit::Architecture::brickwork(4, true), 2, 2, Rational(1, 5),
                                     TopBoundary::kBA, half, mixed),
              to_double(replica::brute_force_partition(lat, replica::WeightKind::kDepolarizingExact, 2,
                                                       Rational(1, 5))),
              1e-12);
}

TEST(MonteCarlo, AgreesWithTwirl) {
  const auto arch = circuit::Architecture::brickwork(4, true);
  const Region half = Region::range(4, 0, 2);
  const auto est = mc_replica_average(arch, 2, 2, 0.3, purity_observable(TopBoundary::kBA, half), 3000, 41);
  const double exact = two_copy_twirl_average(arch, 2, 2, Rational(3, 10), TopBoundary::kBA, half);
  EXPECT_LT(std::abs(est.mean - exact), 3 * est.stderr_) << est.mean << " vs " << exact;

  for (int d : {2, 3}) {
    const auto arch2 = circuit::Architecture::brickwork(2, true);
    const Region a(2, {0});
    const auto page = mc_replica_average(arch2, 1, d, 0.0, purity_observable(TopBoundary::kBA, a), 4000, 43);
    EXPECT_LT(std::abs(page.mean - 2.0 * d / (d * d + 1)), 3 * page.stderr_);
  }
}

TEST(MonteCarlo, DeterminismAndScaling) {
  const auto arch = circuit::Architecture::brickwork(4, true);
  const Region half = Region::range(4, 0, 2);
  const auto obs = purity_observable(TopBoundary::kBA, half);
  const auto one = mc_replica_average(arch, 2, 2, 0.2, obs, 1, 7);
  EXPECT_DOUBLE_EQ(one.mean, obs(sample_haar_circuit(arch, 2, 2, 0.2, 7, 0, replica::BottomBoundary::kProductState)));
  EXPECT_EQ(one.stderr_, 0.0);

  MonteCarloOptions threads;
  threads.workers = 3;
  const auto serial = mc_replica_average(arch, 2, 2, 0.2, obs, 200, 7);
  const auto parallel = mc_replica_average(arch, 2, 2, 0.2, obs, 200, 7, threads);
  EXPECT_EQ(serial.mean, parallel.mean);
  EXPECT_EQ(serial.stderr_, parallel.stderr_);

  const auto small = mc_replica_average(arch, 2, 2, 0.2, obs, 400, 8);
  const auto large = mc_replica_average(arch, 2, 2, 0.2, obs, 1600, 9);
  EXPECT_NEAR(small.stderr_ / large.stderr_, 2.0, 0.4);
}

}  // namespace
}  // namespace chanent::oracle
