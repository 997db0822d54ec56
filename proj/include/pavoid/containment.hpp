#pragma once

#include <optional>
#include <vector>

#include "pavoid/binary_matrix.hpp"
#include "pavoid/permutation.hpp"

namespace pavoid {

// Witness for pattern containment: row_map[i-1] is the host row of pattern
// row i, col_map likewise; both strictly increasing, 1-based.
struct Embedding {
  std::vector<int> row_map;
  std::vector<int> col_map;
};

// True iff the maps are strictly increasing, in range, and every 1-entry of
// the pattern lands on a 1-entry of the host.
bool embedding_valid(const BinaryMatrix& host, const BinaryMatrix& pattern,
                     const Embedding& e);

// Containment with row/column deletions and 1->0 demotions allowed: is there
// an embedding of `pattern` into `host`? Exact; returns the witness found by
// a depth-first search over host columns for the pattern columns left to
// right, maintaining per pattern row the set of host columns its 1s need and
// pruning with a greedy earliest-feasible row assignment.
std::optional<Embedding> contains(const BinaryMatrix& host, const BinaryMatrix& pattern);
std::optional<Embedding> contains(const BinaryMatrix& host, const Permutation& pattern);

// Partition of [n] into consecutive intervals, recorded by the 1-based
// inclusive end position of each interval; ends are strictly increasing and
// the last equals n.
struct IntervalDecomposition {
  std::vector<int> ends;

  int parts() const { return static_cast<int>(ends.size()); }
  int start(int p) const { return p == 1 ? 1 : ends[p - 2] + 1; }
  int end(int p) const { return ends[p - 1]; }
  void validate(int n) const;  // throws std::invalid_argument
};

// Entry (i, j) of the contraction is 1 iff block (i, j) of the decomposed
// host holds at least one 1.
BinaryMatrix contract(const BinaryMatrix& host, const IntervalDecomposition& row_decomp,
                      const IntervalDecomposition& col_decomp);

// Hard cap for is_interval_minor host dimensions; beyond it the pair count
// of decompositions is no longer desk scale.
inline constexpr int kIntervalMinorSizeLimit = 14;

// Is `pattern` an interval minor of `host`: some pair of decompositions
// contracts the host to a matrix dominating the pattern entrywise. Decided by
// enumerating every decomposition pair, which keeps this routine usable as a
// reference predicate; throws SizeLimitError when host exceeds
// kIntervalMinorSizeLimit in either dimension.
bool is_interval_minor(const BinaryMatrix& pattern, const BinaryMatrix& host);

}  // namespace pavoid
