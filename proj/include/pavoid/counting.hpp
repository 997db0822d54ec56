#pragma once

#include <gmpxx.h>

#include <vector>

#include "pavoid/permutation.hpp"

namespace pavoid {

// Number of n-permutations with no subsequence order-isomorphic to pi.
// Counted by extending prefixes value by value; a new value can only create
// occurrences that end at it, so only those are tested, and any prefix that
// picks up an occurrence is abandoned with its whole subtree. Practical up
// to n ~ 12 for |pi| = 3; use threads > 1 to split over the first value.
mpz_class count_avoiders(const Permutation& pi, int n, int threads = 1);

struct CountSeries {
  std::vector<mpz_class> counts;  // counts[i] = avoiders of length i+1
  std::vector<mpq_class> roots;   // floor(counts[i]^(1/(i+1)) * 10^6)/10^6
  mpq_class lower_bound;          // max of the roots' exact counterparts
};

// Series up to nmax plus the certified growth lower bound: avoider counts
// multiply supermultiplicatively, so each counts[m]^(1/m) already bounds the
// limit from below; roots are truncated downward so the bound stays valid.
CountSeries sw_estimate(const Permutation& pi, int nmax, int threads = 1);

}  // namespace pavoid
