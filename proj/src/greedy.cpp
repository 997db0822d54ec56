#include "pavoid/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pavoid/constructions.hpp"
#include "pavoid/repetition.hpp"

namespace pavoid {

Embedding InstanceTrace::embedding(const Permutation& p) const {
  if (!found) throw std::logic_error("no embedding: instance did not finish");
  int k = p.size();
  Embedding e;
  e.row_map.resize(k);
  std::iota(e.row_map.begin(), e.row_map.end(), base_row);
  e.col_map = matched_columns;  // j-th move happened while targeting r_j
  return e;
}

InstanceTrace run_instance(const BinaryMatrix& host, int base_row, const Permutation& p) {
  int k = p.size();
  if (base_row < 1 || base_row + k - 1 > host.rows())
    throw std::invalid_argument("instance rows out of range");
  InstanceTrace t;
  t.base_row = base_row;
  int j = 1;  // current target column of P
  for (int col = 1; col <= host.cols(); ++col) {
    int row = base_row - 1 + p.preimage(j);
    bool one = host.get(row, col);
    StepOutcome out = StepOutcome::stall;
    if (one) {
      t.matched_columns.push_back(col);
      if (j == k) {
        out = StepOutcome::found;
        t.found = true;
      } else {
        out = StepOutcome::move;
        ++j;
      }
    }
    t.steps.push_back({col, row, out});
    if (t.found) break;
  }
  return t;
}

std::vector<InstanceTrace> run_all_instances(const BinaryMatrix& host, const Permutation& p) {
  int k = p.size();
  if (host.rows() < k)
    throw std::invalid_argument("host has fewer rows than the pattern");
  std::vector<InstanceTrace> ts;
  ts.reserve(host.rows() - k + 1);
  for (int b = 1; b + k - 1 <= host.rows(); ++b)
    ts.push_back(run_instance(host, b, p));
  return ts;
}

std::optional<Embedding> find_tight_occurrence(const BinaryMatrix& host, const Permutation& p) {
  int k = p.size();
  if (host.rows() < k)
    throw std::invalid_argument("host has fewer rows than the pattern");
  for (int b = 1; b + k - 1 <= host.rows(); ++b) {
    InstanceTrace t = run_instance(host, b, p);
    if (t.found) return t.embedding(p);
  }
  return std::nullopt;
}

namespace {

// Indices of the n lines with the most zeros, ties preferring lower index.
std::vector<int> worst_lines(const std::vector<int>& zero_counts, int n) {
  std::vector<int> idx(zero_counts.size());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return zero_counts[a - 1] > zero_counts[b - 1];
  });
  idx.resize(n);
  return idx;
}

}  // namespace

std::optional<Embedding> robust_find(const BinaryMatrix& host, const Permutation& p) {
  int k = p.size();
  if (host.rows() != 4 * k || host.cols() != 4 * k)
    throw std::invalid_argument("robust_find expects a 4k x 4k host");
  std::vector<int> rz(host.rows()), cz(host.cols());
  for (int r = 1; r <= host.rows(); ++r) rz[r - 1] = host.row_zero_count(r);
  for (int c = 1; c <= host.cols(); ++c) cz[c - 1] = host.col_zero_count(c);
  std::vector<int> del_rows = worst_lines(rz, k);
  std::vector<int> del_cols = worst_lines(cz, k);
  BinaryMatrix trimmed = host.without_rows_cols(del_rows, del_cols);
  auto e = find_tight_occurrence(trimmed, p);
  if (!e) return std::nullopt;
  // Lift trimmed coordinates back to the host.
  std::vector<int> row_of(trimmed.rows() + 1), col_of(trimmed.cols() + 1);
  std::vector<bool> dr(host.rows() + 1, false), dc(host.cols() + 1, false);
  for (int r : del_rows) dr[r] = true;
  for (int c : del_cols) dc[c] = true;
  int rr = 0, cc = 0;
  for (int r = 1; r <= host.rows(); ++r)
    if (!dr[r]) row_of[++rr] = r;
  for (int c = 1; c <= host.cols(); ++c)
    if (!dc[c]) col_of[++cc] = c;
  for (int& r : e->row_map) r = row_of[r];
  for (int& c : e->col_map) c = col_of[c];
  return e;
}

namespace {

// floor(x) for x = (a/b) * (k/r)^(1/3): largest m with b^3 m^3 r <= a^3 k.
long long floor_scaled_cbrt(long long a, long long b, long long k, long long r) {
  auto ok = [&](long long m) {
    // All operands stay well under 2^63 for the supported k <= 10^6.
    __int128 lhs = static_cast<__int128>(b * b * b) * m * m * m * r;
    __int128 rhs = static_cast<__int128>(a * a * a) * k;
    return lhs <= rhs;
  };
  long long m = static_cast<long long>(
      std::cbrt(static_cast<double>(k) / static_cast<double>(r)) *
      static_cast<double>(a) / static_cast<double>(b));
  while (!ok(m)) --m;
  while (ok(m + 1)) ++m;
  return std::max(0LL, m);
}

}  // namespace

RepfreeParams repfree_params(int k, int r) {
  if (k < 9 || r < 3)
    throw std::domain_error("window parameters need k >= 9 and r >= 3");
  // ceil((35/24)(k/r)^(1/3)) = floor + 1 unless the cube root is exactly
  // attained, which 35^3 k = 24^3 w^3 r detects.
  long long fl = floor_scaled_cbrt(35, 24, k, r);
  __int128 exact_lhs = static_cast<__int128>(24 * 24 * 24) * fl * fl * fl * r;
  __int128 exact_rhs = static_cast<__int128>(35 * 35 * 35) * k;
  long long w = (exact_lhs == exact_rhs && fl > 0) ? fl : fl + 1;
  if (3 * w > k)
    throw std::logic_error("window bound w <= k/3 violated");  // cannot happen
  double v = std::cbrt(static_cast<double>(k) / static_cast<double>(r)) / 3.0;
  return {static_cast<int>(w), v};
}

long long per_line_zero_budget(int k, int r) {
  if (k < 9 || r < 3)
    throw std::domain_error("zero budgets need k >= 9 and r >= 3");
  return floor_scaled_cbrt(1, 3, k, r);
}

long long total_zero_budget(int k, int r) {
  if (k < 9 || r < 3)
    throw std::domain_error("zero budgets need k >= 9 and r >= 3");
  return floor_scaled_cbrt(k, 3, k, r);
}

int window_moves_violation(const std::vector<InstanceTrace>& traces, int k, int w) {
  if (traces.empty()) throw std::invalid_argument("no traces given");
  int steps = 0;
  int first_found = 0;  // step index of the earliest completion, 0 = none
  for (const auto& t : traces) {
    steps = std::max(steps, static_cast<int>(t.steps.size()));
    if (t.found) {
      int fs = static_cast<int>(t.steps.size());
      if (first_found == 0 || fs < first_found) first_found = fs;
    }
  }
  auto moves_at = [&](const InstanceTrace& t, int step) {
    if (step > static_cast<int>(t.steps.size())) return false;
    return t.steps[step - 1].outcome != StepOutcome::stall;
  };
  int last_j = 3 * k - w;
  if (first_found > 0) last_j = std::min(last_j, first_found);
  for (int j = 1; j <= last_j; ++j) {
    long long movers = 0;
    for (const auto& t : traces) movers += moves_at(t, j);
    if (4 * movers >= 3LL * k) continue;  // >= 3k/4 instances moved
    long long window_moves = 0;
    for (const auto& t : traces)
      for (int s = j; s < j + w; ++s) window_moves += moves_at(t, s);
    if (4 * window_moves < 3LL * k * w) return j;
  }
  return 0;
}

Permutation random_repetition_free(int k, int r, SplitMix64& gen) {
  if (k < 2 || r < 2) throw std::invalid_argument("need k >= 2 and r >= 2");
  for (;;) {
    Permutation p = random_permutation(k, gen);
    if (max_repetition(p) < r) return p;
  }
}

}  // namespace pavoid
