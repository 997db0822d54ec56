#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pavoid/containment.hpp"
#include "pavoid/permutation.hpp"
#include "pavoid/rng.hpp"

namespace pavoid {

// One-pass occurrence scan for a k-permutation P over k consecutive host
// rows. The instance based at row b targets rows r_j = b - 1 + row of the
// 1-entry in column j of P, for j = 1..k. Step i inspects host entry
// (current r_j, column i): a 0 stalls, a 1 advances to r_{j+1} (a "move"),
// and a 1 while at r_k completes the occurrence.
enum class StepOutcome { stall, move, found };

struct TraceStep {
  int column;         // host column inspected at this step
  int inspected_row;  // host row inspected
  StepOutcome outcome;
};

struct InstanceTrace {
  int base_row = 0;
  std::vector<TraceStep> steps;
  std::vector<int> matched_columns;  // columns of moves, in order (found included)
  bool found = false;

  // Only valid when found: consecutive rows from base_row plus the matched
  // columns, as an embedding of P's matrix.
  Embedding embedding(const Permutation& p) const;
};

InstanceTrace run_instance(const BinaryMatrix& host, int base_row, const Permutation& p);

// All rows-k+1 instances, each scanning every host column independently.
std::vector<InstanceTrace> run_all_instances(const BinaryMatrix& host, const Permutation& p);

// First successful instance by base row. Sound (any embedding returned is
// real) but deliberately not complete: a host can contain P with its rows
// spread out while no k consecutive rows work.
std::optional<Embedding> find_tight_occurrence(const BinaryMatrix& host, const Permutation& p);

// For a 4k x 4k host: delete the k rows and k columns holding the most
// 0-entries (ties broken toward lower index), run the tight scan on the
// remaining 3k x 3k matrix, and lift the embedding back to host coordinates.
std::optional<Embedding> robust_find(const BinaryMatrix& host, const Permutation& p);

// Window parameters for the scan analysis: w = ceil((35/24)(k/r)^(1/3)) and
// v = (1/3)(k/r)^(1/3). Domain k >= 9, r >= 3, where w <= k/3 always holds
// (enforced; a violation would be a logic error). w is exact via integer
// cube comparisons; v is reported as a double with exact floors alongside.
struct RepfreeParams {
  int w;
  double v;
};

RepfreeParams repfree_params(int k, int r);

// floor((1/3)(k/r)^(1/3)): zeros allowed per row and per column of a 3k x 3k
// host in the tight-scan guarantee.
long long per_line_zero_budget(int k, int r);
// floor((k/3)(k/r)^(1/3)): total zeros allowed in a 4k x 4k host for
// robust_find's guarantee.
long long total_zero_budget(int k, int r);

// Aggregate-move check over full traces of a 3k x 3k host: for every window
// start j <= 3k - w (and at or before the first completion step, after which
// the premise is moot), either at least 3k/4 instances move at step j or the
// instances make at least 3kw/4 moves in steps j..j+w-1 combined. A `found`
// outcome counts as a move. Returns the first failing j, or 0 if none.
int window_moves_violation(const std::vector<InstanceTrace>& traces, int k, int w);

// Rejection-samples k-permutations until one has max_repetition < r.
Permutation random_repetition_free(int k, int r, SplitMix64& gen);

}  // namespace pavoid
