#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "chanent/replica/perm.h"

namespace chanent::replica {

enum class MeasureKind { kMutual, kOpEE, kNegativity };

std::string to_string(MeasureKind kind);
MeasureKind parse_measure_kind(const std::string& text);

// Top boundary permutations for a replica measure with Renyi index n and
// alpha copies of each block. Q = n*alpha, or 2*n*alpha for the operator
// entanglement.
//   mutual:     a = id, b = (1..n) on every block of n replicas
//   opEE:       c = (2,3)(4,5)...(2n,1), d = (1,2)(3,4)... on blocks of 2n
//   negativity: a = id, b as above, e = (n,...,1)
struct BoundaryPerms {
  MeasureKind kind;
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t q = 0;
  std::map<char, Perm> perms;

  const Perm& operator[](char name) const;
};

BoundaryPerms boundary_permutations(MeasureKind kind, std::size_t n, std::size_t alpha = 1);

}  // namespace chanent::replica
