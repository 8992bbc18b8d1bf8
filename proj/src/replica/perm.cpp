#include "chanent/replica/perm.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chanent::replica {

namespace {

void require_degree(std::size_t degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("permutation degree above 16");
}

}  // namespace

Perm::Perm(std::size_t degree) : degree_(degree) {
  require_degree(degree);
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Perm::Perm(std::size_t degree, const std::vector<std::size_t>& images) : degree_(degree) {
  require_degree(degree);
  if (images.size() != degree) throw std::invalid_argument("image list has the wrong length");
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree; ++i) {
    if (images[i] >= degree || seen[images[i]]) throw std::invalid_argument("not a bijection");
    seen[images[i]] = true;
    images_[i] = static_cast<std::uint8_t>(images[i]);
  }
}

Perm Perm::from_cycle_list(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      if (from >= degree || used[from]) throw std::invalid_argument("bad cycle notation");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(degree, images);
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ') {
      ++pos;
      continue;
    }
    if (ch != '(') throw std::invalid_argument("cycle notation must start with '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced cycle notation");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::size_t> cycle;
    const bool has_commas = body.find(',') != std::string_view::npos;
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ',' || body[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
        ++j;
        if (!has_commas) break;
      }
      if (j == i) throw std::invalid_argument("bad character in cycle notation");
      const std::size_t value = std::stoul(std::string(body.substr(i, j - i)));
      if (value == 0) throw std::invalid_argument("cycle notation is 1-based");
      cycle.push_back(value - 1);
      i = j;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return from_cycle_list(degree, cycles);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("permutation degree mismatch");
  Perm out(a.degree_);
  for (std::size_t i = 0; i < a.degree_; ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

std::size_t Perm::cycle_count() const {
  std::array<bool, kMaxDegree> seen{};
  std::size_t count = 0;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

std::size_t Perm::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < degree_; ++i) count += images_[i] == i;
  return count;
}

std::vector<std::vector<std::size_t>> Perm::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> type;
  for (const auto& c : cycles()) type.push_back(c.size());
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::size_t Perm::index() const {
  // Lehmer code.
  std::size_t idx = 0;
  for (std::size_t i = 0; i < degree_; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < degree_; ++j) smaller += images_[j] < images_[i];
    idx = idx * (degree_ - i) + smaller;
  }
  return idx;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i] + 1;
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

std::size_t common_fixed_points(const Perm& g1, const Perm& g2) {
  if (g1.degree() != g2.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::size_t count = 0;
  for (std::size_t i = 0; i < g1.degree(); ++i) count += g1(i) == i && g2(i) == i;
  return count;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

const std::vector<Perm>& all_perms(std::size_t degree) {
  if (degree > 9) throw std::invalid_argument("enumerating S_Q is limited to Q <= 9");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Perm>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> perms;
  perms.reserve(factorial(degree));
  do {
    perms.emplace_back(degree, images);
  } while (std::next_permutation(images.begin(), images.end()));
  return cache.emplace(degree, std::move(perms)).first->second;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace chanent::replica
