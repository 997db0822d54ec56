#pragma once

#include <gmpxx.h>

#include "pavoid/binary_matrix.hpp"
#include "pavoid/highdim.hpp"
#include "pavoid/permutation.hpp"

// Deliberately naive reference implementations with code paths independent of
// the optimized library, used to cross-check it at small sizes.
namespace pavoid::oracle {

// Every row subset x column subset of the host, checked entrywise.
bool contains_bruteforce(const BinaryMatrix& host, const BinaryMatrix& pattern);

// Occurrence of the k-pattern on k consecutive host rows; column subsets by
// backtracking.
bool tight_contains_bruteforce(const BinaryMatrix& host, const Permutation& p);

// Maximum 1-count over all 2^(n^2) n-square matrices avoiding p; n <= 5.
long long ex_bruteforce(int n, const Permutation& p);

// Interval-minor analogue over all 2^(n^2) matrices; n <= 5.
long long exm_bruteforce(int n, const BinaryMatrix& b);

// Pattern containment by enumerating position subsets of the host sequence.
bool perm_contains_bruteforce(const Permutation& host, const Permutation& pattern);

// Avoider count by walking all n! permutations; n <= 10.
mpz_class count_avoiders_bruteforce(const Permutation& p, int n);

// Every k-subset of host 1-positions, paired with the pattern in first-axis
// order and checked on all axes.
bool contains_dd_bruteforce(const DDimBinaryMatrix& host,
                            const DDimPermutation& pattern);

}  // namespace pavoid::oracle
