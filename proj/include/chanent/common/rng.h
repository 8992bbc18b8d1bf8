#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace chanent {

// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                         std::array<std::uint32_t, 2> key);

// Mixes a base seed and a stream index into a 64-bit Philox key. Distinct
// (seed, index) pairs give unrelated keys.
std::uint64_t derive_stream_key(std::uint64_t base_seed, std::uint64_t stream_index);

// A substream of a counter-based generator. The stream is addressed by a
// 64-bit key and three 32-bit coordinates; the fourth counter word walks
// through the draws. Two CounterRng objects with the same address produce the
// same sequence no matter when or on which thread they are constructed.
class CounterRng {
 public:
  using result_type = std::uint32_t;

  explicit CounterRng(std::uint64_t key, std::uint32_t a = 0, std::uint32_t b = 0,
                      std::uint32_t c = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u32(); }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint32_t below(std::uint32_t bound);

  // Standard normal via Box-Muller (one value per call; the pair partner is cached).
  double normal();

  bool bernoulli(double probability) { return uniform() < probability; }

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace chanent
