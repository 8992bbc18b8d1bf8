#include <gtest/gtest.h>

#include <cmath>

#include "chanent/common/parallel.h"
#include "chanent/common/rational.h"
#include "chanent/common/rng.h"

namespace chanent {
namespace {

TEST(Philox, KnownAnswerVectors) {
  using Block = std::array<std::uint32_t, 4>;
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
            (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, SubstreamsAreReproducibleAndDistinct) {
  CounterRng a(derive_stream_key(7, 3), 1, 2, 3);
  CounterRng b(derive_stream_key(7, 3), 1, 2, 3);
  CounterRng c(derive_stream_key(7, 3), 1, 2, 4);
  int same = 0;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u32();
    EXPECT_EQ(va, b.next_u32());
    same += va == c.next_u32();
  }
  EXPECT_LT(same, 3);
  EXPECT_NE(derive_stream_key(1, 0), derive_stream_key(0, 1));
}

TEST(CounterRng, UniformMoments) {
  CounterRng rng(99);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0, normal2 = 0.0;
  int counts[7] = {};
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum2 += u * u;
    counts[rng.below(7)]++;
    const double g = rng.normal();
    normal2 += g * g;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(sum2 / n, 1.0 / 3.0, 0.005);
  EXPECT_NEAR(normal2 / n, 1.0, 0.02);
  for (int c : counts) EXPECT_NEAR(c / double(n), 1.0 / 7.0, 0.005);
}

TEST(Rational, ParsesExactDecimals) {
  EXPECT_EQ(parse_rational("3/10"), Rational(3, 10));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-2.5e-1"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(rational_from_double(0.375), Rational(3, 8));
}

TEST(ParallelFor, CoversEveryIndexAndPropagatesErrors) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

}  // namespace
}  // namespace chanent
