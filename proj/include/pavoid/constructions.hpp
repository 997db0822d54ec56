#pragma once

#include <cstdint>

#include "pavoid/binary_matrix.hpp"
#include "pavoid/permutation.hpp"
#include "pavoid/rng.hpp"

namespace pavoid {

// Named matrix families. Permutation-valued generators return Permutation;
// the rest are plain binary matrices.

// cross(k), odd k: pi(i) = i for odd i, k+1-i for even i.
Permutation cross(int k);

// fox_grid(k), k a perfect square with root s: ones at (a+b*s+1, b+a*s+1)
// for a, b in 0..s-1. Equals grid_product(identity(s), identity(s)).
Permutation fox_grid(int k);

// x_matrix(k), even k >= 2: ones on both diagonals i = j and i + j = k+1.
BinaryMatrix x_matrix(int k);

BinaryMatrix all_ones_matrix(int r, int k);

// Grid product: kl points, one at ((j-1)k + i, (pi(i)-1)l + rho(j)) for each
// i in [k], j in [l]; k = |pi|, l = |rho|.
Permutation grid_product(const Permutation& pi, const Permutation& rho);

// Block sums of square matrices. direct_sum places A bottom-left and B
// top-right (so direct_sum(identity(1), identity(1)) is the 2x2 reversal);
// skew_sum places A top-left and B bottom-right.
BinaryMatrix direct_sum(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix skew_sum(const BinaryMatrix& a, const BinaryMatrix& b);

// (k+l)x(k+l) matrix with a 1 at (i, j) iff i = i1+i2 and j = j1+j2 for some
// ones (i1, j1) of a and (i2, j2) of b.
BinaryMatrix minkowski_sum(const BinaryMatrix& a, const BinaryMatrix& b);

// Uniform random k-permutation, deterministic per seed (splitmix64 +
// Fisher-Yates; see rng.hpp).
Permutation random_permutation(int k, std::uint64_t seed);
Permutation random_permutation(int k, SplitMix64& gen);

}  // namespace pavoid
