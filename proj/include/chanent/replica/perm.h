#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chanent::replica {

inline constexpr std::size_t kMaxDegree = 16;

// A permutation of {0, ..., Q-1}. Printed and parsed in 1-based cycle
// notation, e.g. "(1,2)(3,4)"; the identity prints as "()".
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity
  Perm(std::size_t degree, const std::vector<std::size_t>& images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  // Parses 1-based cycle notation; commas are optional for single digits.
  static Perm from_cycles(std::size_t degree, std::string_view text);
  static Perm from_cycle_list(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return degree_; }
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  // (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;

  std::size_t cycle_count() const;
  // Minimal number of transpositions: Q - #cycles.
  std::size_t distance() const { return degree_ - cycle_count(); }
  std::size_t fixed_points() const;
  bool is_identity() const { return fixed_points() == degree_; }
  // Cycle lengths sorted in decreasing order.
  std::vector<std::size_t> cycle_type() const;
  std::vector<std::vector<std::size_t>> cycles() const;

  // Position of this permutation in lexicographic order of image tuples.
  std::size_t index() const;

  bool operator==(const Perm& other) const {
    return degree_ == other.degree_ && images_ == other.images_;
  }
  bool operator<(const Perm& other) const {
    return degree_ != other.degree_ ? degree_ < other.degree_ : images_ < other.images_;
  }
  std::string to_string() const;

 private:
  std::size_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

// Number of points fixed by both g1 and g2.
std::size_t common_fixed_points(const Perm& g1, const Perm& g2);

// All permutations of the given degree in lexicographic order (index order).
const std::vector<Perm>& all_perms(std::size_t degree);

std::size_t factorial(std::size_t n);

// Integer partitions of n in decreasing lexicographic order, each sorted
// decreasingly.
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

}  // namespace chanent::replica
