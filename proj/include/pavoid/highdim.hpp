#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pavoid/permutation.hpp"
#include "pavoid/repetition.hpp"
#include "pavoid/rng.hpp"

namespace pavoid {

// A d-dimensional permutation of size n: n points in [n]^d whose coordinates
// along every single axis form a permutation of 1..n.  Canonically stored
// sorted by the first coordinate, so the object is equivalent to the (d-1)
// ordinary permutations mapping first-axis rank to each remaining coordinate.
class DDimPermutation {
 public:
  DDimPermutation(int d, std::vector<std::vector<int>> pts);
  static DDimPermutation identity(int d, int n);
  // Point set {(i, layers[0](i), ..., layers[d-2](i))}; all layers equal size.
  static DDimPermutation from_layers(const std::vector<Permutation>& layers);

  int dim() const { return d_; }
  int size() const { return n_; }
  // i-th point in first-axis order, 1-based.  point(i)[0] == i.
  const std::vector<int>& point(int i) const { return points_[i - 1]; }
  const std::vector<std::vector<int>>& points() const { return points_; }
  Permutation layer(int axis) const;  // axis in 2..d
  std::string to_text() const;        // "d n" header plus one point per line
  bool operator==(const DDimPermutation& o) const = default;

 private:
  int d_ = 2, n_ = 0;
  std::vector<std::vector<int>> points_;  // sorted by first coordinate
};

// A d-dimensional 0/1 matrix of size sizes[0] x ... x sizes[d-1], stored as
// the sorted set of its 1-positions.
class DDimBinaryMatrix {
 public:
  DDimBinaryMatrix(int d, std::vector<int> sizes);
  static DDimBinaryMatrix from_points(std::vector<int> sizes,
                                      const std::vector<std::vector<int>>& pts);

  int dim() const { return d_; }
  const std::vector<int>& sizes() const { return sizes_; }
  int one_count() const { return static_cast<int>(ones_.size()); }
  const std::vector<std::vector<int>>& ones() const { return ones_; }
  void set(const std::vector<int>& pos, bool value);
  bool get(const std::vector<int>& pos) const;
  std::string to_text() const;

 private:
  void check_pos(const std::vector<int>& pos) const;
  int d_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> ones_;  // lexicographically sorted
};

// True iff some subset of host 1-positions maps bijectively onto the pattern
// points so that every coordinate axis preserves strict order.
bool contains_dd(const DDimBinaryMatrix& host, const DDimPermutation& pattern);
bool contains_dd(const DDimPermutation& host, const DDimPermutation& pattern);

// True iff no point dominates another in every coordinate.
bool is_antichain(const DDimPermutation& p);

// Number of d-dimensional n-permutations (d = p.dim()) containing no copy of
// p, by exhaustive enumeration of the (n!)^(d-1) layer tuples.  Supported
// envelope: (n!)^(d-1) <= 3*10^7, e.g. d = 3 with n <= 7.
mpz_class count_avoiders_dd(const DDimPermutation& p, int n, int threads = 1);

// Number of ALL d-dimensional 0/1 matrices of side n avoiding p, by
// exhaustive enumeration of 2^(n^d) matrices; requires n^d <= 16.
mpz_class count_all_avoiders_dd(const DDimPermutation& p, int n);

// Probability that a uniformly random d-dimensional order on [n] (the
// intersection of d independent uniform linear orders) is an antichain.
// Exact value by enumeration with the first order fixed to the identity;
// same envelope as count_avoiders_dd.
mpq_class antichain_probability_exact(int d, int n);
McEstimate antichain_probability_mc(int d, int n, long samples, SplitMix64& gen);

struct MonotoneSub {
  DDimPermutation sub;         // coordinates reranked to 1..size
  std::vector<int> positions;  // 1-based indices into p's first-axis order
};

// Extracts a monotone subpattern (every axis all-increasing or all-decreasing
// along the first-axis order) of size >= ceil(k^(1/2^(d-1))) by repeatedly
// taking a longest monotone subsequence in each remaining axis.  Ties prefer
// the increasing direction and the lexicographically smallest index witness.
MonotoneSub monotone_subpattern(const DDimPermutation& p);

// ceil(k^(1/2^(d-1))): the guaranteed monotone subpattern size, computed with
// exact integer arithmetic.
long min_monotone_size(int d, long k);

// Interleaves l pairwise-incomparable parts into one permutation of size
// sum(m_i).  interleavings[a] lists, per slot of axis a+1, which part (1..l)
// owns that coordinate; each part's points keep their relative order on every
// axis.  The result provably avoids the (l+1)-point diagonal; this is
// re-checked and a violation throws logic_error.
DDimPermutation merge_avoiders(const std::vector<DDimPermutation>& parts,
                               const std::vector<std::vector<int>>& interleavings);
DDimPermutation merge_avoiders_random(const std::vector<DDimPermutation>& parts,
                                      SplitMix64& gen);

}  // namespace pavoid
