#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>

#include "pavoid/binary_matrix.hpp"
#include "pavoid/containment.hpp"
#include "pavoid/permutation.hpp"

namespace pavoid {

enum class SearchStatus { exact, lower_bound, upper_bound };

const char* to_string(SearchStatus s);

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct ExtremalResult {
  int n = 0;
  long long value = 0;
  SearchStatus status = SearchStatus::exact;
  std::optional<BinaryMatrix> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

// Maximum 1-count of an n x n matrix with no embedding of P. Branch and
// bound over entries in column-major order: a 1 is tried first, partial
// matrices already containing P are cut (supersets only add occurrences),
// and a node dies when current ones + undecided entries fall short of the
// incumbent. Pruning keeps ties alive, so the witness is the overall
// lexicographically smallest maximizer (row-major, 0 before 1). Exceeding
// the node budget downgrades the status to lower_bound.
ExtremalResult ex_exact(int n, const Permutation& p,
                        std::uint64_t budget = kDefaultNodeBudget);

// Same search with "B is an interval minor" as the forbidden relation. Host
// sizes above kIntervalMinorSizeLimit are refused (SizeLimitError).
ExtremalResult exm_exact(int n, const BinaryMatrix& b,
                         std::uint64_t budget = kDefaultNodeBudget);

struct RowDensityResult {
  long long value = 0;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes_explored = 0;
};

// Maximum row count of a P-avoiding matrix with z columns and at least y
// ones per row (the transposed flag swaps the roles, i.e. computes the
// column version through P^T). Zero when y > z. Throws std::domain_error
// when y < |P|: identical rows then stack forever and the value is infinite.
RowDensityResult row_density_extremal(const Permutation& p, int z, int y,
                                      bool transposed = false,
                                      std::uint64_t budget = kDefaultNodeBudget);

// max over n <= nmax of ex(n, P)/n, using exactly-computed values only;
// throws UnavailableError if the budget exhausts before any exact value.
mpq_class fh_lower_estimate(const Permutation& p, int nmax,
                            std::uint64_t budget = kDefaultNodeBudget);

// Smallest rational q with ex(u, P) < q u^2 at the witness scale u, i.e.
// (ex(u, P) + 1)/u^2. Vacuous when q >= 1 (u below the pattern size).
struct FrameworkQ {
  mpq_class q;
  bool vacuous = false;
};

FrameworkQ framework_q(const Permutation& p, int u,
                       std::uint64_t budget = kDefaultNodeBudget);

}  // namespace pavoid
