#include "pavoid/containment.hpp"

#include <algorithm>
#include <stdexcept>

#include "pavoid/errors.hpp"

namespace pavoid {

bool embedding_valid(const BinaryMatrix& host, const BinaryMatrix& pattern,
                     const Embedding& e) {
  int pr = pattern.rows(), pc = pattern.cols();
  if (static_cast<int>(e.row_map.size()) != pr) return false;
  if (static_cast<int>(e.col_map.size()) != pc) return false;
  for (int i = 0; i < pr; ++i) {
    int r = e.row_map[i];
    if (r < 1 || r > host.rows()) return false;
    if (i > 0 && e.row_map[i - 1] >= r) return false;
  }
  for (int j = 0; j < pc; ++j) {
    int c = e.col_map[j];
    if (c < 1 || c > host.cols()) return false;
    if (j > 0 && e.col_map[j - 1] >= c) return false;
  }
  for (int i = 1; i <= pr; ++i)
    for (int j = 1; j <= pc; ++j)
      if (pattern.get(i, j) && !host.get(e.row_map[i - 1], e.col_map[j - 1]))
        return false;
  return true;
}

namespace {

// Column-by-column search. Choosing host column c for pattern column j adds
// bit c to the needed-column mask of every pattern row with a 1 in column j.
// Feasibility of a (partial) choice is decided greedily: scan host rows
// upward assigning each pattern row the earliest host row covering its mask.
// Earliest-first is exact here because any valid assignment can be pushed up
// row by row without breaking cover or order, so if greedy fails nothing
// succeeds. At a full column choice the greedy rows are therefore a witness.
struct ContainSearch {
  const BinaryMatrix& host;
  const BinaryMatrix& pattern;
  int pr, pc, hw;
  std::vector<std::vector<std::uint64_t>> need;  // per pattern row, host-col mask
  std::vector<int> chosen;                       // host col per pattern col
  std::vector<int> greedy_rows;

  ContainSearch(const BinaryMatrix& h, const BinaryMatrix& p)
      : host(h), pattern(p), pr(p.rows()), pc(p.cols()), hw(h.words_per_row()) {
    need.assign(pr, std::vector<std::uint64_t>(hw, 0));
    chosen.assign(pc, 0);
    greedy_rows.assign(pr, 0);
  }

  bool greedy_feasible() {
    int prev = 0;
    for (int i = 0; i < pr; ++i) {
      int limit = host.rows() - (pr - 1 - i);  // leave room for rows below
      int r = prev + 1;
      while (r <= limit && !host.row_covers(r, need[i])) ++r;
      if (r > limit) return false;
      greedy_rows[i] = r;
      prev = r;
    }
    return true;
  }

  std::optional<Embedding> search(int j, int min_col) {
    if (j == pc) {
      Embedding e;
      e.row_map = greedy_rows;  // greedy last ran with all masks complete
      e.col_map.assign(chosen.begin(), chosen.end());
      return e;
    }
    for (int c = min_col; c <= host.cols() - (pc - 1 - j); ++c) {
      for (int i = 1; i <= pr; ++i)
        if (pattern.get(i, j + 1))
          need[i - 1][(c - 1) / 64] |= 1ULL << ((c - 1) % 64);
      chosen[j] = c;
      if (greedy_feasible())
        if (auto e = search(j + 1, c + 1)) return e;
      for (int i = 1; i <= pr; ++i)
        if (pattern.get(i, j + 1))
          need[i - 1][(c - 1) / 64] &= ~(1ULL << ((c - 1) % 64));
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Embedding> contains(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  if (pattern.rows() > host.rows() || pattern.cols() > host.cols())
    return std::nullopt;
  ContainSearch s(host, pattern);
  if (!s.greedy_feasible()) return std::nullopt;  // only possible if pr > rows
  return s.search(0, 1);
}

std::optional<Embedding> contains(const BinaryMatrix& host, const Permutation& pattern) {
  return contains(host, pattern.matrix());
}

void IntervalDecomposition::validate(int n) const {
  if (ends.empty()) throw std::invalid_argument("decomposition has no intervals");
  int prev = 0;
  for (int e : ends) {
    if (e <= prev) throw std::invalid_argument("decomposition ends not increasing");
    prev = e;
  }
  if (prev != n)
    throw std::invalid_argument("decomposition covers " + std::to_string(prev) +
                                " of " + std::to_string(n) + " positions");
}

BinaryMatrix contract(const BinaryMatrix& host, const IntervalDecomposition& row_decomp,
                      const IntervalDecomposition& col_decomp) {
  row_decomp.validate(host.rows());
  col_decomp.validate(host.cols());
  BinaryMatrix m(row_decomp.parts(), col_decomp.parts());
  for (int i = 1; i <= row_decomp.parts(); ++i)
    for (int j = 1; j <= col_decomp.parts(); ++j)
      if (host.block_has_one(row_decomp.start(i), row_decomp.end(i),
                             col_decomp.start(j), col_decomp.end(j)))
        m.set(i, j, true);
  return m;
}

namespace {

// Enumerate decompositions of [n] into exactly `parts` intervals: choose the
// parts-1 cut positions. `ends` is rewritten in place lexicographically.
bool first_decomposition(std::vector<int>& ends, int n, int parts) {
  if (parts > n) return false;
  ends.resize(parts);
  for (int i = 0; i < parts - 1; ++i) ends[i] = i + 1;
  ends[parts - 1] = n;
  return true;
}

bool next_decomposition(std::vector<int>& ends, int n) {
  int parts = static_cast<int>(ends.size());
  for (int i = parts - 2; i >= 0; --i) {
    int cap = (i + 2 < parts ? ends[i + 1] : n) - 1;
    if (ends[i] < cap) {
      ++ends[i];
      for (int j = i + 1; j < parts - 1; ++j) ends[j] = ends[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_interval_minor(const BinaryMatrix& pattern, const BinaryMatrix& host) {
  if (host.rows() > kIntervalMinorSizeLimit || host.cols() > kIntervalMinorSizeLimit)
    throw SizeLimitError("interval-minor test limited to hosts of size " +
                         std::to_string(kIntervalMinorSizeLimit) +
                         "; use a budgeted search instead");
  int t = pattern.rows(), tc = pattern.cols();
  std::vector<int> rends, cends;
  if (!first_decomposition(rends, host.rows(), t)) return false;
  do {
    // Row-contract once per row decomposition, then scan column cuts.
    BinaryMatrix rc(t, host.cols());
    {
      IntervalDecomposition rd{rends};
      for (int i = 1; i <= t; ++i)
        for (int c = 1; c <= host.cols(); ++c)
          if (host.block_has_one(rd.start(i), rd.end(i), c, c)) rc.set(i, c, true);
    }
    if (!first_decomposition(cends, host.cols(), tc)) return false;
    do {
      IntervalDecomposition cd{cends};
      bool ok = true;
      for (int i = 1; ok && i <= t; ++i)
        for (int j = 1; ok && j <= tc; ++j)
          if (pattern.get(i, j) &&
              !rc.block_has_one(i, i, cd.start(j), cd.end(j)))
            ok = false;
      if (ok) return true;
    } while (next_decomposition(cends, host.cols()));
  } while (next_decomposition(rends, host.rows()));
  return false;
}

}  // namespace pavoid
