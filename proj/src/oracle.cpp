#include "pavoid/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pavoid/containment.hpp"
#include "pavoid/errors.hpp"

namespace pavoid::oracle {

namespace {

// 0-based k-combinations of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i)
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  return false;
}

}  // namespace

bool contains_bruteforce(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  int hr = host.rows(), hc = host.cols();
  int pr = pattern.rows(), pc = pattern.cols();
  if (pr > hr || pc > hc) return false;
  std::vector<int> rows(pr);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<int> cols(pc);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      bool ok = true;
      for (int i = 1; i <= pr && ok; ++i)
        for (int j = 1; j <= pc && ok; ++j)
          if (pattern.get(i, j) && !host.get(rows[i - 1] + 1, cols[j - 1] + 1))
            ok = false;
      if (ok) return true;
    } while (next_combination(cols, hc));
  } while (next_combination(rows, hr));
  return false;
}

namespace {

// Columns chosen left to right; position j of the pattern's column order must
// hit a 1 in the window row holding value j.
bool tight_window_dfs(const BinaryMatrix& host, const Permutation& p, int top,
                      int j, int min_col) {
  int k = p.size();
  if (j > k) return true;
  int row = top + p.preimage(j) - 1;
  for (int c = min_col; c <= host.cols() - (k - j); ++c)
    if (host.get(row, c) && tight_window_dfs(host, p, top, j + 1, c + 1))
      return true;
  return false;
}

}  // namespace

bool tight_contains_bruteforce(const BinaryMatrix& host, const Permutation& p) {
  int k = p.size();
  if (k > host.rows() || k > host.cols()) return false;
  for (int top = 1; top + k - 1 <= host.rows(); ++top)
    if (tight_window_dfs(host, p, top, 1, 1)) return true;
  return false;
}

long long ex_bruteforce(int n, const Permutation& p) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 5) throw SizeLimitError("2^(n^2) enumeration limited to n <= 5");
  BinaryMatrix pm = p.matrix();
  long long best = -1;
  int cells = n * n;
  for (unsigned long mask = 0; mask < (1UL << cells); ++mask) {
    BinaryMatrix m(n, n);
    int ones = 0;
    for (int c = 0; c < cells; ++c)
      if (mask >> c & 1) {
        m.set(c / n + 1, c % n + 1, true);
        ++ones;
      }
    if (ones > best && !contains_bruteforce(m, pm)) best = ones;
  }
  return best;
}

long long exm_bruteforce(int n, const BinaryMatrix& b) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 5) throw SizeLimitError("2^(n^2) enumeration limited to n <= 5");
  long long best = -1;
  int cells = n * n;
  for (unsigned long mask = 0; mask < (1UL << cells); ++mask) {
    BinaryMatrix m(n, n);
    int ones = 0;
    for (int c = 0; c < cells; ++c)
      if (mask >> c & 1) {
        m.set(c / n + 1, c % n + 1, true);
        ++ones;
      }
    if (ones > best && !is_interval_minor(b, m)) best = ones;
  }
  return best;
}

bool perm_contains_bruteforce(const Permutation& host, const Permutation& pattern) {
  int n = host.size(), k = pattern.size();
  if (k > n) return false;
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        if ((host.image(pos[a] + 1) < host.image(pos[b] + 1)) !=
            (pattern.image(a + 1) < pattern.image(b + 1)))
          ok = false;
    if (ok) return true;
  } while (next_combination(pos, n));
  return false;
}

mpz_class count_avoiders_bruteforce(const Permutation& p, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 10) throw SizeLimitError("n! enumeration limited to n <= 10");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  mpz_class avoiders = 0;
  do {
    Permutation host(images);
    if (!perm_contains_bruteforce(host, p)) ++avoiders;
  } while (std::next_permutation(images.begin(), images.end()));
  return avoiders;
}

bool contains_dd_bruteforce(const DDimBinaryMatrix& host,
                            const DDimPermutation& pattern) {
  if (host.dim() != pattern.dim())
    throw std::invalid_argument("host and pattern dimensions differ");
  int k = pattern.size(), d = pattern.dim();
  int ones = host.one_count();
  if (k > ones) return false;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  do {
    // Pair the subset with the pattern in first-axis order.
    std::vector<const std::vector<int>*> sel(k);
    for (int i = 0; i < k; ++i) sel[i] = &host.ones()[pick[i]];
    std::sort(sel.begin(), sel.end(),
              [](const std::vector<int>* x, const std::vector<int>* y) {
                return (*x)[0] < (*y)[0];
              });
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        for (int a = 0; a < d && ok; ++a) {
          bool up = pattern.point(i + 1)[a] < pattern.point(j + 1)[a];
          int x = (*sel[i])[a], y = (*sel[j])[a];
          if (up ? !(x < y) : !(x > y)) ok = false;
        }
    if (ok) return true;
  } while (next_combination(pick, ones));
  return false;
}

}  // namespace pavoid::oracle
