#pragma once

#include <cstddef>
#include <vector>

#include "chanent/common/rng.h"
#include "chanent/stabilizer/clifford_gate.h"

namespace chanent::circuit {

using stabilizer::CliffordGate;

// Uniformly random element of Sp(2m, d), as a 2m x 2m matrix over GF(d)
// whose column j is the image of basis vector j in (x_1..x_m | z_1..z_m)
// coordinates. Built by symplectic Gram-Schmidt: v_j is uniform and nonzero in
// the symplectic complement of the earlier pairs, w_j is uniform among the
// vectors of that complement with <v_j, w_j> = 1.
std::vector<std::vector<int>> sample_symplectic(int d, std::size_t m, CounterRng& rng);

// Uniformly random m-qudit Clifford gate modulo global phase: a uniform
// symplectic part composed with a uniform Pauli offset.
CliffordGate sample_random_clifford(int d, std::size_t m, CounterRng& rng);

}  // namespace chanent::circuit
