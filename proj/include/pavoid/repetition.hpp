#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pavoid/permutation.hpp"

namespace pavoid {

// Distance vector between two points (i1, pi(i1)), (i2, pi(i2)) of the
// permutation diagram, canonicalized to i2 > i1 so the first component is
// positive; the histogram then counts each unordered pair once. Counting the
// ordered pairs (both signs) would exactly double every entry.
struct DistanceHistogram {
  std::map<std::pair<int, int>, std::uint64_t> counts;
  std::uint64_t total() const;
};

DistanceHistogram distance_histogram(const Permutation& p);

// Largest r such that some distance vector occurs r times; needs k >= 2.
int max_repetition(const Permutation& p);

// Smallest integer r0 >= 4*log2(k)/log2(log2(k)); needs k >= 3 (smaller k
// make the denominator nonpositive). Exact; see scattered_threshold notes in
// repetition.cpp for how ties against an integer are ruled out.
int scattered_threshold(int k);

// A permutation is scattered when it is r-repetition-free for every
// r >= the threshold, i.e. max_repetition < scattered_threshold.
bool is_scattered(const Permutation& p);

// Exhaustive statistics over all k! permutations, k <= 8.
struct FullCensus {
  int k;
  // with_repetition[r-1], r in 1..k-1: permutations having some vector
  // repeated at least r times.
  std::vector<std::uint64_t> with_repetition;
  // per_vector_max[r-1]: max over distance vectors v of the number of
  // permutations in which v occurs at least r times.
  std::vector<std::uint64_t> per_vector_max;
  // scattered permutations (always k! for k <= 8; the threshold exceeds k-1).
  std::uint64_t scattered_count;
};

FullCensus full_census(int k, int threads = 1);

// Convenience accessors over the census.
std::vector<std::uint64_t> repetition_census(int k, int threads = 1);
std::uint64_t per_vector_census(int k, int r);

struct McEstimate {
  double value;
  double std_error;  // binomial sqrt(p(1-p)/samples)
  std::uint64_t hits;
  std::uint64_t samples;
};

McEstimate scattered_fraction_mc(int k, std::uint64_t samples, std::uint64_t seed);

}  // namespace pavoid
