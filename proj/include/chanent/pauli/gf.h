#pragma once

#include <cstdint>
#include <vector>

namespace chanent::pauli {

// Largest local dimension supported by the byte-backed tableau.
inline constexpr int kMaxDimension = 251;

bool is_prime(int value);

// Throws std::invalid_argument unless d is a prime in [2, kMaxDimension].
void require_prime(int d);

// Arithmetic in GF(d) for a small prime d. Reduction of values below 2^32 uses
// a precomputed Barrett constant instead of a hardware divide.
class PrimeField {
 public:
  explicit PrimeField(int d);

  int order() const { return d_; }

  std::uint32_t reduce(std::uint32_t value) const {
    const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value) * barrett_) >> 32);
    std::uint32_t r = value - q * static_cast<std::uint32_t>(d_);
    if (r >= static_cast<std::uint32_t>(d_)) r -= static_cast<std::uint32_t>(d_);
    return r;
  }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>(reduce(static_cast<std::uint32_t>(a) + b));
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>(reduce(static_cast<std::uint32_t>(a) + d_ - b));
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>(reduce(static_cast<std::uint32_t>(a) * b));
  }
  std::uint8_t neg(std::uint8_t a) const { return a == 0 ? 0 : static_cast<std::uint8_t>(d_ - a); }
  std::uint8_t inv(std::uint8_t a) const;

  // Reduces an arbitrary signed integer into [0, d).
  std::uint8_t from_int(long long value) const {
    long long r = value % d_;
    if (r < 0) r += d_;
    return static_cast<std::uint8_t>(r);
  }

 private:
  int d_;
  std::uint64_t barrett_;
  std::vector<std::uint8_t> inverse_;
};

}  // namespace chanent::pauli
