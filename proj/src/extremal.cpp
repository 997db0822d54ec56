#include "pavoid/extremal.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "pavoid/errors.hpp"

namespace pavoid {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound: return "lower_bound";
    case SearchStatus::upper_bound: return "upper_bound";
  }
  return "?";
}

namespace {

// Entry order is column-major; forbidden(m) must be monotone (stay true
// under 0 -> 1 flips) for the containment cut to be sound.
struct MaxOnesSearch {
  int n;
  std::function<bool(const BinaryMatrix&)> forbidden;
  std::uint64_t budget;

  BinaryMatrix cur;
  long long ones = 0;
  long long best = -1;
  std::optional<BinaryMatrix> best_matrix;
  std::uint64_t nodes = 0;
  bool truncated = false;

  MaxOnesSearch(int n, std::function<bool(const BinaryMatrix&)> f, std::uint64_t b)
      : n(n), forbidden(std::move(f)), budget(b), cur(n, n) {}

  void consider_leaf() {
    if (ones > best) {
      best = ones;
      best_matrix = cur;
    } else if (ones == best && best_matrix && cur.lex_less(*best_matrix)) {
      best_matrix = cur;
    }
  }

  // Seed the incumbent greedily: take every entry that keeps the matrix
  // avoiding. Gives the bound cut something to chew on from the start.
  void greedy_seed() {
    for (int idx = 0; idx < n * n; ++idx) {
      int c = idx / n + 1, r = idx % n + 1;
      cur.set(r, c, true);
      if (forbidden(cur)) cur.set(r, c, false); else ++ones;
    }
    consider_leaf();
    cur = BinaryMatrix(n, n);
    ones = 0;
  }

  void dfs(int idx) {
    if (truncated) return;
    if (++nodes > budget) {
      truncated = true;
      return;
    }
    if (idx == n * n) {
      consider_leaf();
      return;
    }
    long long undecided = n * n - idx;
    if (ones + undecided < best) return;  // '<' keeps ties for the lex scan
    int c = idx / n + 1, r = idx % n + 1;
    cur.set(r, c, true);
    if (!forbidden(cur)) {
      ++ones;
      dfs(idx + 1);
      --ones;
    }
    cur.set(r, c, false);
    if (ones + undecided - 1 >= best) dfs(idx + 1);
  }

  ExtremalResult run() {
    auto t0 = std::chrono::steady_clock::now();
    greedy_seed();
    dfs(0);
    ExtremalResult res;
    res.n = n;
    res.value = best;
    res.status = truncated ? SearchStatus::lower_bound : SearchStatus::exact;
    res.witness = best_matrix;
    res.nodes_explored = nodes;
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }
};

}  // namespace

ExtremalResult ex_exact(int n, const Permutation& p, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("ex needs n >= 1");
  BinaryMatrix pm = p.matrix();
  MaxOnesSearch s(n, [&pm](const BinaryMatrix& m) {
    return contains(m, pm).has_value();
  }, budget);
  return s.run();
}

ExtremalResult exm_exact(int n, const BinaryMatrix& b, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("exm needs n >= 1");
  if (n > kIntervalMinorSizeLimit)
    throw SizeLimitError("exm host size limited to " +
                         std::to_string(kIntervalMinorSizeLimit));
  MaxOnesSearch s(n, [&b](const BinaryMatrix& m) {
    return is_interval_minor(b, m);
  }, budget);
  return s.run();
}

namespace {

struct RowDensitySearch {
  const BinaryMatrix pattern;
  int z, y;
  std::uint64_t budget;
  std::vector<std::vector<bool>> row_pool;  // all admissible rows, ascending
  std::vector<int> stack;
  long long best = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;

  RowDensitySearch(const BinaryMatrix& pm, int z, int y, std::uint64_t b)
      : pattern(pm), z(z), y(y), budget(b) {
    for (unsigned long bits = 0; bits < (1UL << z); ++bits) {
      if (std::popcount(bits) < y) continue;
      std::vector<bool> row(z);
      for (int c = 0; c < z; ++c) row[c] = (bits >> c) & 1;
      row_pool.push_back(std::move(row));
    }
  }

  BinaryMatrix materialize() const {
    BinaryMatrix m(static_cast<int>(stack.size()), z);
    for (int r = 1; r <= static_cast<int>(stack.size()); ++r)
      for (int c = 1; c <= z; ++c)
        if (row_pool[stack[r - 1]][c - 1]) m.set(r, c, true);
    return m;
  }

  void dfs() {
    if (truncated) return;
    if (++nodes > budget) {
      truncated = true;
      return;
    }
    best = std::max(best, static_cast<long long>(stack.size()));
    for (std::size_t i = 0; i < row_pool.size(); ++i) {
      stack.push_back(static_cast<int>(i));
      if (!contains(materialize(), pattern)) dfs();
      stack.pop_back();
      if (truncated) return;
    }
  }
};

}  // namespace

RowDensityResult row_density_extremal(const Permutation& p, int z, int y,
                                      bool transposed, std::uint64_t budget) {
  if (z < 1 || y < 0) throw std::invalid_argument("need z >= 1 and y >= 0");
  if (z > 24) throw SizeLimitError("row-density search limited to z <= 24 columns");
  if (y > z) return {0, SearchStatus::exact, 0};
  if (y < p.size())
    throw std::domain_error(
        "row-density extremal is unbounded for y < |P|: identical rows with "
        "y ones never form P, so rows can be stacked without limit");
  Permutation q = transposed ? p.inverse() : p;  // P^T of a permutation matrix
  RowDensitySearch s(q.matrix(), z, y, budget);
  s.dfs();
  return {s.best, s.truncated ? SearchStatus::lower_bound : SearchStatus::exact,
          s.nodes};
}

mpq_class fh_lower_estimate(const Permutation& p, int nmax, std::uint64_t budget) {
  if (nmax < 1) throw std::invalid_argument("need nmax >= 1");
  bool any = false;
  mpq_class best = 0;
  for (int n = 1; n <= nmax; ++n) {
    ExtremalResult r = ex_exact(n, p, budget);
    if (r.status != SearchStatus::exact) continue;
    mpq_class ratio(static_cast<long>(r.value), n);
    ratio.canonicalize();
    if (!any || ratio > best) best = ratio;
    any = true;
  }
  if (!any)
    throw UnavailableError("no exact extremal value within the node budget");
  return best;
}

FrameworkQ framework_q(const Permutation& p, int u, std::uint64_t budget) {
  if (u < 2) throw std::invalid_argument("witness scale u must be >= 2");
  ExtremalResult r = ex_exact(u, p, budget);
  if (r.status != SearchStatus::exact)
    throw UnavailableError("ex(u, P) not exact within the node budget");
  mpq_class q(static_cast<long>(r.value + 1), static_cast<long>(u) * u);
  q.canonicalize();
  return {q, q >= 1};
}

}  // namespace pavoid
