#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "chanent/common/rng.h"
#include "chanent/pauli/bit_matrix.h"
#include "chanent/pauli/canonical.h"
#include "chanent/pauli/gf_matrix.h"
#include "chanent/pauli/pauli_word.h"

namespace chanent::pauli {
namespace {

PauliWord random_word(std::size_t n, int d, CounterRng& rng) {
  PauliWord w(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    w.set(i, static_cast<int>(rng.below(d)), static_cast<int>(rng.below(d)));
  }
  return w;
}

GfMatrix random_matrix(std::size_t rows, std::size_t cols, int d, CounterRng& rng, int zero_bias) {
  GfMatrix m(rows, cols, d);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<int>(rng.below(zero_bias + 1)) == 0) m.set(r, c, static_cast<int>(rng.below(d)));
    }
  }
  return m;
}

TEST(PrimeField, RejectsCompositeDimensions) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PauliWord(3, 6), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(251));
}

TEST(PrimeField, ArithmeticMatchesIntegers) {
  for (int d : {2, 3, 5, 7, 251}) {
    PrimeField f(d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        ASSERT_EQ(f.mul(a, b), (a * b) % d);
        ASSERT_EQ(f.add(a, b), (a + b) % d);
        ASSERT_EQ(f.sub(a, b), ((a - b) % d + d) % d);
      }
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1);
    }
  }
}

TEST(PauliWord, StringRoundTripAndProducts) {
  const auto x = PauliWord::from_string("X");
  const auto z = PauliWord::from_string("Z");
  const auto y = PauliWord::from_string("Y");
  EXPECT_EQ(x * z, PauliWord::from_string("-iY"));  // XZ = -iY
  EXPECT_EQ(z * x, PauliWord::from_string("iY"));
  EXPECT_EQ(y * y, PauliWord(1, 2));
  EXPECT_EQ(PauliWord::from_string("-XZ_Y").to_string(), "-XZ_Y");
  EXPECT_EQ(PauliWord::from_string("XIZY").weight(), 3u);
}

TEST(PauliWord, QuditPowerIsIdentity) {
  CounterRng rng(5);
  for (int d : {3, 5, 7}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto w = random_word(4, d, rng);
      w.set_phase(static_cast<int>(rng.below(d)));
      EXPECT_TRUE(w.pow(d) == PauliWord(4, d));
    }
  }
}

TEST(SymplecticForm, SpecExamples) {
  EXPECT_EQ(symplectic_form(PauliWord::from_string("X"), PauliWord::from_string("Z")), 1);
  EXPECT_EQ(symplectic_form(PauliWord::from_string("X"), PauliWord::from_string("X")), 0);
  EXPECT_EQ(symplectic_form(PauliWord::single(1, 3, 0, 1, 0), PauliWord::single(1, 3, 0, 0, 2)), 2);
  EXPECT_THROW(symplectic_form(PauliWord(2, 2), PauliWord(3, 2)), std::invalid_argument);
  EXPECT_THROW(symplectic_form(PauliWord(2, 2), PauliWord(2, 3)), std::invalid_argument);
}

TEST(SymplecticForm, AntisymmetricAndMatchesCommutationPhase) {
  CounterRng rng(11);
  for (int d : {2, 3, 5}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto p = random_word(5, d, rng);
      const auto q = random_word(5, d, rng);
      const int f = symplectic_form(p, q);
      ASSERT_EQ((f + symplectic_form(q, p)) % d, 0);
      // pq = w^{units * (z_p.x_q - x_p.z_q)} qp, i.e. phase(pq) - phase(qp) = -units * f.
      const int modulus = p.phase_modulus();
      const int gap = ((p * q).phase() - (q * p).phase() + modulus) % modulus;
      ASSERT_EQ(gap, ((-commutation_phase_units(d) * f) % modulus + modulus) % modulus);
    }
  }
}

TEST(GfRank, SpecExamples) {
  GfMatrix id(3, 3, 2);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1);
  EXPECT_EQ(id.rank(), 3u);
  EXPECT_EQ(GfMatrix(3, 4, 5).rank(), 0u);
  GfMatrix dup(2, 2, 2);
  for (int r = 0; r < 2; ++r) {
    dup.set(r, 0, 1);
    dup.set(r, 1, 1);
  }
  EXPECT_EQ(dup.rank(), 1u);
}

TEST(GfRank, InvariantUnderRowOperations) {
  CounterRng rng(21);
  for (int d : {2, 3, 5}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto m = random_matrix(6, 8, d, rng, 2);
      const auto rank = m.rank();
      std::vector<std::size_t> order(m.rows());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      GfMatrix shuffled(m.rows(), m.cols(), d);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) shuffled.set(r, c, m.at(order[r], c));
      }
      EXPECT_EQ(shuffled.rank(), rank);
      for (int op = 0; op < 20; ++op) {
        const std::size_t a = rng.below(6);
        const std::size_t b = rng.below(6);
        if (a == b) continue;
        shuffled.add_scaled_row(a, b, static_cast<std::uint8_t>(rng.below(d)));
        shuffled.scale_row(b, static_cast<std::uint8_t>(1 + rng.below(d - 1)));
      }
      EXPECT_EQ(shuffled.rank(), rank);
      const auto echelon = m.row_echelon();
      EXPECT_EQ(echelon.rank(), rank);
    }
  }
}

TEST(BitMatrix, AgreesWithGenericPath) {
  CounterRng rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = 1 + rng.below(12);
    const std::size_t cols = 1 + rng.below(140);
    auto m = random_matrix(rows, cols, 2, rng, static_cast<int>(rng.below(4)));
    const auto packed = BitMatrix::from_gf(m);
    ASSERT_EQ(packed.rank(), m.rank());
    std::vector<std::size_t> pivots;
    const auto reduced = packed.reduced(&pivots);
    const auto generic = m.row_echelon();
    ASSERT_EQ(pivots, generic.pivot_columns);
    ASSERT_TRUE(reduced.to_gf() == generic.reduced);
  }
}

TEST(Canonicalize, SpecExamples) {
  const std::vector<std::size_t> none;
  {
    std::vector<PauliWord> rows{PauliWord::from_string("ZZI"), PauliWord::from_string("IZZ")};
    const std::vector<std::size_t> avoid{0};
    const auto basis = subgroup_avoiding(rows, avoid);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], PauliWord::from_string("IZZ"));
  }
  {
    std::vector<PauliWord> rows{PauliWord::from_string("XX"), PauliWord::from_string("ZZ")};
    const std::vector<std::size_t> avoid{0};
    EXPECT_TRUE(subgroup_avoiding(rows, avoid).empty());
  }
  {
    std::vector<PauliWord> rows{PauliWord::from_string("ZI"), PauliWord::from_string("IZ")};
    const auto basis = subgroup_avoiding(rows, none);
    EXPECT_EQ(basis.size(), 2u);
    EXPECT_EQ(gf_rank(basis), 2u);
  }
  {
    std::vector<PauliWord> rows{PauliWord::from_string("X"), PauliWord::from_string("Z")};
    const std::vector<std::size_t> order{0};
    EXPECT_THROW(canonicalize(rows, order), std::invalid_argument);
  }
}

// Random commuting sets: images of Z_i under random products of two-site
// transvections are stabilizer groups of random states.
std::vector<PauliWord> random_commuting_rows(std::size_t n, int d, CounterRng& rng) {
  std::vector<PauliWord> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(PauliWord::single(n, d, i, 0, 1));
  for (int step = 0; step < 40; ++step) {
    const auto g = random_word(n, d, rng);
    // Conjugating by a Clifford transvection T_g: P -> P * g^{<P, g>}.
    for (auto& r : rows) {
      const int f = symplectic_form(r, g);
      if (f != 0) r *= g.pow(f);
    }
  }
  rows.resize(1 + rng.below(n));
  return rows;
}

TEST(Canonicalize, SpansTheSameGroup) {
  CounterRng rng(44);
  for (int d : {2, 3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng.below(5);
      auto rows = random_commuting_rows(n, d, rng);
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const std::size_t leading = rng.below(n + 1);
      const auto form = canonicalize(rows, order, leading);
      const std::size_t rank = gf_rank(rows);
      ASSERT_EQ(form.rows.size(), rank);
      std::vector<PauliWord> both = rows;
      both.insert(both.end(), form.rows.begin(), form.rows.end());
      ASSERT_EQ(gf_rank(both), rank);
      for (const auto& w : form.avoiding) {
        for (std::size_t i = 0; i < leading; ++i) ASSERT_FALSE(w.acts_on(order[i]));
      }
      // The avoiding basis is the full subgroup: its dimension equals rank
      // minus the rank of the rows restricted to the leading block.
      std::vector<std::size_t> lead_sites(order.begin(), order.begin() + leading);
      std::vector<PauliWord> restricted;
      for (const auto& r : rows) restricted.push_back(r.restricted(lead_sites));
      ASSERT_EQ(form.avoiding.size(), rank - gf_rank(restricted));
    }
  }
}

}  // namespace
}  // namespace chanent::pauli
