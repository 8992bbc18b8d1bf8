#include "chanent/stabilizer/region.h"

#include <stdexcept>

namespace chanent::stabilizer {

Region::Region(std::size_t n, std::span<const std::size_t> sites) : mask_(n, false) {
  for (std::size_t s : sites) {
    if (s >= n) throw std::out_of_range("region site out of range");
    mask_[s] = true;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (mask_[s]) sites_.push_back(s);
  }
}

Region::Region(std::size_t n, std::initializer_list<std::size_t> sites)
    : Region(n, std::span<const std::size_t>(sites.begin(), sites.size())) {}

Region Region::range(std::size_t n, std::size_t begin, std::size_t end) {
  if (begin > end || end > n) throw std::out_of_range("bad region range");
  std::vector<std::size_t> sites;
  for (std::size_t s = begin; s < end; ++s) sites.push_back(s);
  return Region(n, sites);
}

Region Region::complement() const {
  std::vector<std::size_t> sites;
  for (std::size_t s = 0; s < mask_.size(); ++s) {
    if (!mask_[s]) sites.push_back(s);
  }
  return Region(mask_.size(), sites);
}

Region Region::united(const Region& other) const {
  if (other.system_size() != system_size()) throw std::invalid_argument("region size mismatch");
  std::vector<std::size_t> sites = sites_;
  sites.insert(sites.end(), other.sites_.begin(), other.sites_.end());
  return Region(mask_.size(), sites);
}

bool Region::overlaps(const Region& other) const {
  for (std::size_t s : sites_) {
    if (other.contains(s)) return true;
  }
  return false;
}

long Region::prefix_length() const {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i] != i) return -1;
  }
  return static_cast<long>(sites_.size());
}

}  // namespace chanent::stabilizer
