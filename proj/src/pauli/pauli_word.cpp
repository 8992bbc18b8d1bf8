#include "chanent/pauli/pauli_word.h"

#include <sstream>
#include <stdexcept>

#include "chanent/pauli/gf.h"

namespace chanent::pauli {

namespace {

int mod(long long value, int m) {
  long long r = value % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_compatible(const PauliWord& p, const PauliWord& q) {
  if (p.size() != q.size() || p.dim() != q.dim()) {
    throw std::invalid_argument("Pauli words differ in size or local dimension");
  }
}

}  // namespace

PauliWord::PauliWord(std::size_t n, int d) : d_(d), x_(n, 0), z_(n, 0) { require_prime(d); }

PauliWord PauliWord::from_string(std::string_view letters) {
  int phase = 0;
  if (!letters.empty() && (letters.front() == '+' || letters.front() == '-')) {
    if (letters.front() == '-') phase = 2;
    letters.remove_prefix(1);
  }
  if (!letters.empty() && letters.front() == 'i') {
    phase += 1;
    letters.remove_prefix(1);
  }
  PauliWord w(letters.size(), 2);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case 'I': case '_': break;
      case 'X': w.x_[i] = 1; break;
      case 'Z': w.z_[i] = 1; break;
      case 'Y':
        w.x_[i] = 1;
        w.z_[i] = 1;
        phase += 1;  // Y = i X Z
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli letter '") + letters[i] + "'");
    }
  }
  w.phase_ = mod(phase, 4);
  return w;
}

PauliWord PauliWord::single(std::size_t n, int d, std::size_t site, int x, int z) {
  PauliWord w(n, d);
  w.set(site, x, z);
  return w;
}

void PauliWord::set(std::size_t site, int x, int z) {
  if (site >= size()) throw std::out_of_range("site out of range");
  x_[site] = static_cast<std::uint8_t>(mod(x, d_));
  z_[site] = static_cast<std::uint8_t>(mod(z, d_));
}

void PauliWord::set_phase(int phase) { phase_ = mod(phase, phase_modulus()); }

bool PauliWord::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (acts_on(i)) return false;
  }
  return true;
}

std::size_t PauliWord::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < size(); ++i) w += acts_on(i) ? 1 : 0;
  return w;
}

PauliWord& PauliWord::operator*=(const PauliWord& rhs) {
  require_compatible(*this, rhs);
  // (X^a Z^b)(X^c Z^e) = w^{b.c} X^{a+c} Z^{b+e}
  long long commutation = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    commutation += static_cast<long long>(z_[i]) * rhs.x_[i];
    x_[i] = static_cast<std::uint8_t>((x_[i] + rhs.x_[i]) % d_);
    z_[i] = static_cast<std::uint8_t>((z_[i] + rhs.z_[i]) % d_);
  }
  phase_ = mod(phase_ + rhs.phase_ + commutation_phase_units(d_) * commutation, phase_modulus());
  return *this;
}

PauliWord PauliWord::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative Pauli power");
  PauliWord result(size(), d_);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

PauliWord PauliWord::restricted(std::span<const std::size_t> sites) const {
  PauliWord r(size(), d_);
  for (std::size_t s : sites) {
    if (s >= size()) throw std::out_of_range("site out of range");
    r.x_[s] = x_[s];
    r.z_[s] = z_[s];
  }
  return r;
}

std::string PauliWord::to_string() const {
  std::ostringstream out;
  if (d_ == 2) {
    // Print Hermitian letters; Y absorbs one unit of phase.
    int phase = phase_;
    std::string body;
    for (std::size_t i = 0; i < size(); ++i) {
      if (x_[i] && z_[i]) {
        body.push_back('Y');
        phase -= 1;
      } else if (x_[i]) {
        body.push_back('X');
      } else if (z_[i]) {
        body.push_back('Z');
      } else {
        body.push_back('_');
      }
    }
    phase = mod(phase, 4);
    static const char* kPrefix[] = {"+", "+i", "-", "-i"};
    out << kPrefix[phase] << body;
  } else {
    out << "w^" << phase_;
    for (std::size_t i = 0; i < size(); ++i) {
      out << ' ' << static_cast<int>(x_[i]) << ':' << static_cast<int>(z_[i]);
    }
  }
  return out.str();
}

int symplectic_form(const PauliWord& p, const PauliWord& q) {
  require_compatible(p, q);
  long long acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += static_cast<long long>(p.x(i)) * q.z(i) - static_cast<long long>(p.z(i)) * q.x(i);
  }
  return mod(acc, p.dim());
}

}  // namespace chanent::pauli
