#include "chanent/pauli/gf.h"

#include <stdexcept>
#include <string>

namespace chanent::pauli {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int f = 2; f * f <= value; ++f) {
    if (value % f == 0) return false;
  }
  return true;
}

void require_prime(int d) {
  if (d > kMaxDimension || !is_prime(d)) {
    throw std::invalid_argument("local dimension must be a prime <= " +
                                std::to_string(kMaxDimension) + ", got " + std::to_string(d));
  }
}

PrimeField::PrimeField(int d) : d_(d) {
  require_prime(d);
  barrett_ = (std::uint64_t{1} << 32) / static_cast<std::uint64_t>(d);
  inverse_.assign(static_cast<std::size_t>(d), 0);
  for (int a = 1; a < d; ++a) {
    for (int b = 1; b < d; ++b) {
      if ((a * b) % d == 1) {
        inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
}

std::uint8_t PrimeField::inv(std::uint8_t a) const {
  if (a == 0 || a >= d_) throw std::domain_error("no inverse in GF(d)");
  return inverse_[a];
}

}  // namespace chanent::pauli
