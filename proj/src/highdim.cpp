#include "pavoid/highdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pavoid/bignum.hpp"
#include "pavoid/errors.hpp"

namespace pavoid {

DDimPermutation::DDimPermutation(int d, std::vector<std::vector<int>> pts)
    : d_(d), n_(static_cast<int>(pts.size())), points_(std::move(pts)) {
  if (d_ < 2) throw std::invalid_argument("dimension must be >= 2");
  if (n_ == 0) throw std::invalid_argument("need at least one point");
  for (const auto& q : points_)
    if (static_cast<int>(q.size()) != d_)
      throw std::invalid_argument("every point needs exactly d coordinates");
  for (int a = 0; a < d_; ++a) {
    std::vector<char> seen(n_ + 1, 0);
    for (const auto& q : points_) {
      int v = q[a];
      if (v < 1 || v > n_ || seen[v])
        throw std::invalid_argument("axis " + std::to_string(a + 1) +
                                    " coordinates must form a permutation of 1.." +
                                    std::to_string(n_));
      seen[v] = 1;
    }
  }
  // First coordinates are pairwise distinct, so this sorts by axis 1.
  std::sort(points_.begin(), points_.end());
}

DDimPermutation DDimPermutation::identity(int d, int n) {
  std::vector<std::vector<int>> pts(n);
  for (int i = 1; i <= n; ++i) pts[i - 1].assign(d, i);
  return DDimPermutation(d, std::move(pts));
}

DDimPermutation DDimPermutation::from_layers(const std::vector<Permutation>& layers) {
  if (layers.empty()) throw std::invalid_argument("need at least one layer");
  int n = layers[0].size();
  for (const auto& l : layers)
    if (l.size() != n) throw std::invalid_argument("layers must share one size");
  int d = static_cast<int>(layers.size()) + 1;
  std::vector<std::vector<int>> pts(n, std::vector<int>(d));
  for (int i = 1; i <= n; ++i) {
    pts[i - 1][0] = i;
    for (int a = 1; a < d; ++a) pts[i - 1][a] = layers[a - 1].image(i);
  }
  return DDimPermutation(d, std::move(pts));
}

Permutation DDimPermutation::layer(int axis) const {
  if (axis < 2 || axis > d_)
    throw std::invalid_argument("layer axis must lie in 2..d");
  std::vector<int> images(n_);
  for (int i = 0; i < n_; ++i) images[i] = points_[i][axis - 1];
  return Permutation(std::move(images));
}

std::string DDimPermutation::to_text() const {
  std::ostringstream out;
  out << d_ << ' ' << n_ << '\n';
  for (const auto& q : points_) {
    for (int a = 0; a < d_; ++a) out << (a ? " " : "") << q[a];
    out << '\n';
  }
  return out.str();
}

DDimBinaryMatrix::DDimBinaryMatrix(int d, std::vector<int> sizes)
    : d_(d), sizes_(std::move(sizes)) {
  if (d_ < 1 || static_cast<int>(sizes_.size()) != d_)
    throw std::invalid_argument("need one positive size per axis");
  for (int s : sizes_)
    if (s < 1) throw std::invalid_argument("axis sizes must be >= 1");
}

DDimBinaryMatrix DDimBinaryMatrix::from_points(
    std::vector<int> sizes, const std::vector<std::vector<int>>& pts) {
  int d = static_cast<int>(sizes.size());  // read before the move below
  DDimBinaryMatrix m(d, std::move(sizes));
  for (const auto& p : pts) m.set(p, true);
  return m;
}

void DDimBinaryMatrix::check_pos(const std::vector<int>& pos) const {
  if (static_cast<int>(pos.size()) != d_)
    throw std::invalid_argument("position needs exactly d coordinates");
  for (int a = 0; a < d_; ++a)
    if (pos[a] < 1 || pos[a] > sizes_[a])
      throw std::invalid_argument("coordinate " + std::to_string(a + 1) +
                                  " outside 1.." + std::to_string(sizes_[a]));
}

void DDimBinaryMatrix::set(const std::vector<int>& pos, bool value) {
  check_pos(pos);
  auto it = std::lower_bound(ones_.begin(), ones_.end(), pos);
  bool present = it != ones_.end() && *it == pos;
  if (value && !present)
    ones_.insert(it, pos);
  else if (!value && present)
    ones_.erase(it);
}

bool DDimBinaryMatrix::get(const std::vector<int>& pos) const {
  check_pos(pos);
  auto it = std::lower_bound(ones_.begin(), ones_.end(), pos);
  return it != ones_.end() && *it == pos;
}

std::string DDimBinaryMatrix::to_text() const {
  std::ostringstream out;
  out << d_;
  for (int s : sizes_) out << ' ' << s;
  out << '\n';
  for (const auto& q : ones_) {
    for (int a = 0; a < d_; ++a) out << (a ? " " : "") << q[a];
    out << '\n';
  }
  return out.str();
}

namespace {

// Backtracking embedding search.  Host points must be sorted by first
// coordinate (lexicographic sorting qualifies); pattern points are in
// canonical first-axis order, so chosen host indices increase.
struct DdSearch {
  const std::vector<std::vector<int>>& host;
  const std::vector<std::vector<int>>& pat;
  int k, h, d;
  std::vector<int> chosen;

  DdSearch(const std::vector<std::vector<int>>& host,
           const std::vector<std::vector<int>>& pat)
      : host(host),
        pat(pat),
        k(static_cast<int>(pat.size())),
        h(static_cast<int>(host.size())),
        d(pat.empty() ? 0 : static_cast<int>(pat[0].size())),
        chosen(pat.size()) {}

  bool consistent(int j, int cand) const {
    for (int i = 0; i < j; ++i) {
      const auto& ph = host[chosen[i]];
      const auto& qh = host[cand];
      for (int a = 0; a < d; ++a) {
        // Pattern coordinates along one axis are pairwise distinct.
        bool up = pat[i][a] < pat[j][a];
        if (up ? !(ph[a] < qh[a]) : !(ph[a] > qh[a])) return false;
      }
    }
    return true;
  }

  bool dfs(int j, int start) {
    if (j == k) return true;
    for (int cand = start; cand <= h - (k - j); ++cand)
      if (consistent(j, cand)) {
        chosen[j] = cand;
        if (dfs(j + 1, cand + 1)) return true;
      }
    return false;
  }
};

bool contains_core(const std::vector<std::vector<int>>& host_sorted,
                   const std::vector<std::vector<int>>& pat) {
  if (pat.size() > host_sorted.size()) return false;
  DdSearch s(host_sorted, pat);
  return s.dfs(0, 0);
}

// Lexicographic odometer over `count` independent permutations of {0..n-1}.
struct PermOdometer {
  std::vector<std::vector<int>> layers;
  PermOdometer(int count, int n) : layers(count, std::vector<int>(n)) {
    for (auto& l : layers) std::iota(l.begin(), l.end(), 0);
  }
  bool advance() {
    for (int i = static_cast<int>(layers.size()) - 1; i >= 0; --i)
      if (std::next_permutation(layers[i].begin(), layers[i].end())) return true;
    return false;  // wrapped back to the all-identity tuple
  }
};

constexpr long kTupleLimit = 30'000'000;  // (n!)^(d-1) enumeration cap

long factorial_long(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool contains_dd(const DDimBinaryMatrix& host, const DDimPermutation& pattern) {
  if (host.dim() != pattern.dim())
    throw std::invalid_argument("host and pattern dimensions differ");
  return contains_core(host.ones(), pattern.points());
}

bool contains_dd(const DDimPermutation& host, const DDimPermutation& pattern) {
  if (host.dim() != pattern.dim())
    throw std::invalid_argument("host and pattern dimensions differ");
  return contains_core(host.points(), pattern.points());
}

bool is_antichain(const DDimPermutation& p) {
  int n = p.size(), d = p.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // Axis 1 already increases from i to j; the pair is a chain when every
      // remaining axis increases too.
      bool chain = true;
      for (int a = 1; a < d && chain; ++a)
        chain = p.point(i)[a] < p.point(j)[a];
      if (chain) return false;
    }
  return true;
}

mpz_class count_avoiders_dd(const DDimPermutation& p, int n, int threads) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  int d = p.dim(), k = p.size();
  mpz_class tuples = pow_z(factorial(n), d - 1);
  if (k > n) return tuples;  // nothing of size k fits in side n
  if (tuples > kTupleLimit)
    throw SizeLimitError("layer enumeration limited to (n!)^(d-1) <= 3*10^7");

  long nf = factorial_long(n);
  int T = std::max(1, std::min<int>(threads, static_cast<int>(nf)));
  std::vector<long long> per_outer(nf, 0);

  auto worker = [&](int t) {
    std::vector<int> outer(n);
    std::iota(outer.begin(), outer.end(), 0);
    std::vector<std::vector<int>> pts(n, std::vector<int>(d));
    long idx = 0;
    do {
      if (idx % T == t) {
        long long cnt = 0;
        PermOdometer od(d - 2, n);
        do {
          for (int i = 0; i < n; ++i) {
            pts[i][0] = i + 1;
            pts[i][1] = outer[i] + 1;
            for (int a = 2; a < d; ++a) pts[i][a] = od.layers[a - 2][i] + 1;
          }
          if (!contains_core(pts, p.points())) ++cnt;
        } while (od.advance());
        per_outer[idx] = cnt;
      }
      ++idx;
    } while (std::next_permutation(outer.begin(), outer.end()));
  };

  if (T == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < T; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  mpz_class total = 0;
  for (long long c : per_outer) total += static_cast<long>(c);
  return total;
}

mpz_class count_all_avoiders_dd(const DDimPermutation& p, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  int d = p.dim();
  double cells_est = std::pow(static_cast<double>(n), d);
  if (cells_est > 16.0 + 0.5)
    throw SizeLimitError("full 0/1 enumeration limited to n^d <= 16 cells");
  int cells = 1;
  for (int a = 0; a < d; ++a) cells *= n;

  // Cell coordinates in lexicographic order (first axis major).
  std::vector<std::vector<int>> coords(cells, std::vector<int>(d, 1));
  for (int c = 1; c < cells; ++c) {
    coords[c] = coords[c - 1];
    for (int a = d - 1; a >= 0; --a) {
      if (++coords[c][a] <= n) break;
      coords[c][a] = 1;
    }
  }

  mpz_class avoiders = 0;
  std::vector<std::vector<int>> pts;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    pts.clear();
    for (int c = 0; c < cells; ++c)
      if (mask >> c & 1) pts.push_back(coords[c]);
    if (!contains_core(pts, p.points())) ++avoiders;
  }
  return avoiders;
}

namespace {

// No pair i < j (in first-order position) with every layer increasing.
bool layers_antichain(const std::vector<std::vector<int>>& layers, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool chain = true;
      for (const auto& l : layers)
        if (l[i] > l[j]) {
          chain = false;
          break;
        }
      if (chain) return false;
    }
  return true;
}

}  // namespace

mpq_class antichain_probability_exact(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("need d >= 2 and n >= 1");
  mpz_class tuples = pow_z(factorial(n), d - 1);
  if (tuples > kTupleLimit)
    throw SizeLimitError("layer enumeration limited to (n!)^(d-1) <= 3*10^7");
  // By symmetry the first linear order is fixed to the identity; the other
  // d-1 orders run over all tuples.
  PermOdometer od(d - 1, n);
  long hits = 0;
  do {
    if (layers_antichain(od.layers, n)) ++hits;
  } while (od.advance());
  mpq_class q(hits);
  q /= mpq_class(tuples);
  q.canonicalize();
  return q;
}

McEstimate antichain_probability_mc(int d, int n, long samples, SplitMix64& gen) {
  if (d < 2 || n < 1) throw std::invalid_argument("need d >= 2 and n >= 1");
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  std::vector<std::vector<int>> layers(d - 1, std::vector<int>(n));
  for (auto& l : layers) std::iota(l.begin(), l.end(), 0);
  long hits = 0;
  for (long s = 0; s < samples; ++s) {
    for (auto& l : layers) shuffle(l, gen);
    if (layers_antichain(layers, n)) ++hits;
  }
  McEstimate e;
  e.hits = hits;
  e.samples = samples;
  e.value = static_cast<double>(hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(samples));
  return e;
}

namespace {

// Lexicographically smallest longest strictly monotone subsequence; returns
// indices into vals.
std::vector<int> longest_monotone(const std::vector<int>& vals, bool increasing) {
  int m = static_cast<int>(vals.size());
  std::vector<int> len(m, 1);
  for (int i = m - 2; i >= 0; --i)
    for (int j = i + 1; j < m; ++j) {
      bool ok = increasing ? vals[j] > vals[i] : vals[j] < vals[i];
      if (ok) len[i] = std::max(len[i], 1 + len[j]);
    }
  int best = 0;
  for (int i = 0; i < m; ++i) best = std::max(best, len[i]);
  std::vector<int> out;
  int need = best;
  int prev = increasing ? 0 : std::numeric_limits<int>::max();
  for (int i = 0; i < m && need > 0; ++i) {
    bool ok = increasing ? vals[i] > prev : vals[i] < prev;
    if (len[i] == need && ok) {
      out.push_back(i);
      prev = vals[i];
      --need;
    }
  }
  return out;
}

}  // namespace

MonotoneSub monotone_subpattern(const DDimPermutation& p) {
  int n = p.size(), d = p.dim();
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  for (int axis = 2; axis <= d; ++axis) {
    std::vector<int> vals(cur.size());
    for (std::size_t t = 0; t < cur.size(); ++t)
      vals[t] = p.point(cur[t] + 1)[axis - 1];
    auto inc = longest_monotone(vals, true);
    auto dec = longest_monotone(vals, false);
    const auto& pick = inc.size() >= dec.size() ? inc : dec;
    std::vector<int> next(pick.size());
    for (std::size_t t = 0; t < pick.size(); ++t) next[t] = cur[pick[t]];
    cur = std::move(next);
  }
  int m = static_cast<int>(cur.size());
  std::vector<std::vector<int>> pts(m, std::vector<int>(d));
  for (int a = 0; a < d; ++a) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return p.point(cur[x] + 1)[a] < p.point(cur[y] + 1)[a];
    });
    for (int r = 0; r < m; ++r) pts[order[r]][a] = r + 1;
  }
  MonotoneSub res{DDimPermutation(d, std::move(pts)), {}};
  res.positions.reserve(m);
  for (int idx : cur) res.positions.push_back(idx + 1);
  return res;
}

long min_monotone_size(int d, long k) {
  if (d < 2 || k < 1) throw std::invalid_argument("need d >= 2 and k >= 1");
  if (k == 1) return 1;
  if (d - 1 >= 63) return 2;  // 2^(2^(d-1)) certainly exceeds any long k
  unsigned long e = 1UL << (d - 1);
  // Smallest m with m^e >= k.
  long lo = 1, hi = k;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (pow_z(mpz_class(mid), e) >= k)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

DDimPermutation merge_avoiders(const std::vector<DDimPermutation>& parts,
                               const std::vector<std::vector<int>>& interleavings) {
  if (parts.empty()) throw std::invalid_argument("need at least one part");
  int l = static_cast<int>(parts.size());
  int d = parts[0].dim();
  int total = 0;
  for (int i = 0; i < l; ++i) {
    if (parts[i].dim() != d)
      throw std::invalid_argument("all parts must share one dimension");
    if (!is_antichain(parts[i]))
      throw std::invalid_argument("part " + std::to_string(i + 1) +
                                  " contains a 2-point increasing chain");
    total += parts[i].size();
  }
  if (static_cast<int>(interleavings.size()) != d)
    throw std::invalid_argument("need one interleaving per axis");

  // slots[a][i] lists, in increasing order, the axis-(a+1) coordinates owned
  // by part i+1.
  std::vector<std::vector<std::vector<int>>> slots(
      d, std::vector<std::vector<int>>(l));
  for (int a = 0; a < d; ++a) {
    const auto& own = interleavings[a];
    if (static_cast<int>(own.size()) != total)
      throw std::invalid_argument("interleaving for axis " + std::to_string(a + 1) +
                                  " must cover all " + std::to_string(total) +
                                  " slots");
    for (int s = 0; s < total; ++s) {
      int part = own[s];
      if (part < 1 || part > l)
        throw std::invalid_argument("interleaving entries must name a part in 1.." +
                                    std::to_string(l));
      slots[a][part - 1].push_back(s + 1);
    }
    for (int i = 0; i < l; ++i)
      if (static_cast<int>(slots[a][i].size()) != parts[i].size())
        throw std::invalid_argument(
            "axis " + std::to_string(a + 1) + " interleaving gives part " +
            std::to_string(i + 1) + " " + std::to_string(slots[a][i].size()) +
            " slots, expected " + std::to_string(parts[i].size()));
  }

  std::vector<std::vector<int>> pts;
  pts.reserve(total);
  for (int i = 0; i < l; ++i)
    for (int j = 1; j <= parts[i].size(); ++j) {
      const auto& q = parts[i].point(j);
      std::vector<int> np(d);
      // Axis-a coordinate q[a] is the point's within-part rank on that axis,
      // so it picks the rank-th slot owned by the part.
      for (int a = 0; a < d; ++a) np[a] = slots[a][i][q[a] - 1];
      pts.push_back(std::move(np));
    }
  DDimPermutation merged(d, std::move(pts));
  if (contains_dd(merged, DDimPermutation::identity(d, l + 1)))
    throw std::logic_error(
        "merge invariant violated: result contains an increasing chain of " +
        std::to_string(l + 1) + " points");
  return merged;
}

DDimPermutation merge_avoiders_random(const std::vector<DDimPermutation>& parts,
                                      SplitMix64& gen) {
  if (parts.empty()) throw std::invalid_argument("need at least one part");
  int d = parts[0].dim();
  std::vector<int> pool;
  for (std::size_t i = 0; i < parts.size(); ++i)
    pool.insert(pool.end(), parts[i].size(), static_cast<int>(i) + 1);
  std::vector<std::vector<int>> interleavings(d);
  for (int a = 0; a < d; ++a) {
    interleavings[a] = pool;
    shuffle(interleavings[a], gen);
  }
  return merge_avoiders(parts, interleavings);
}

}  // namespace pavoid
