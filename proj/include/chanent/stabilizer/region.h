#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace chanent::stabilizer {

// A set of sites of an n-site system, kept both as a sorted list and as a
// membership mask.
class Region {
 public:
  Region() = default;
  Region(std::size_t n, std::span<const std::size_t> sites);
  Region(std::size_t n, std::initializer_list<std::size_t> sites);

  static Region range(std::size_t n, std::size_t begin, std::size_t end);
  static Region all(std::size_t n) { return range(n, 0, n); }

  std::size_t system_size() const { return mask_.size(); }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  bool contains(std::size_t site) const { return site < mask_.size() && mask_[site]; }
  const std::vector<std::size_t>& sites() const { return sites_; }

  Region complement() const;
  Region united(const Region& other) const;
  bool overlaps(const Region& other) const;
  // Length of the prefix [0, a) this region equals, or -1 if it is not a prefix.
  long prefix_length() const;

  bool operator==(const Region& other) const { return mask_ == other.mask_; }

 private:
  std::vector<std::size_t> sites_;
  std::vector<bool> mask_;
};

}  // namespace chanent::stabilizer
