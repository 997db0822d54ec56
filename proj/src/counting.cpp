#include "pavoid/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "pavoid/bignum.hpp"

namespace pavoid {

namespace {

struct AvoiderCount {
  const std::vector<int>& target;  // pi images
  int k, n;
  std::vector<int> prefix;
  std::vector<bool> used;
  std::vector<int> combo;  // scratch: chosen earlier positions
  std::uint64_t count = 0;

  AvoiderCount(const std::vector<int>& t, int n)
      : target(t), k(static_cast<int>(t.size())), n(n),
        used(n + 1, false), combo(k, 0) {
    prefix.reserve(n);
  }

  // Does some length-k subsequence ending at the just-appended value match
  // the target pattern? Earlier positions are chosen by backtracking over
  // index combinations; comparisons happen pairwise against the target's
  // rank order, bailing at the first mismatch.
  bool completes_occurrence() {
    int m = static_cast<int>(prefix.size());
    combo[k - 1] = m - 1;  // last pattern slot is the new position
    return choose(0, 0, m - 2);
  }

  // Fill slots [slot, k-2] with increasing positions from..limit.
  bool choose(int slot, int from, int limit) {
    if (slot == k - 1) return matches();
    for (int pos = from; pos <= limit - (k - 2 - slot); ++pos) {
      combo[slot] = pos;
      if (choose(slot + 1, pos + 1, limit)) return true;
    }
    return false;
  }

  bool matches() {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        bool want = target[a] < target[b];
        bool got = prefix[combo[a]] < prefix[combo[b]];
        if (want != got) return false;
      }
    return true;
  }

  void extend() {
    if (static_cast<int>(prefix.size()) == n) {
      ++count;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      prefix.push_back(v);
      bool bad = static_cast<int>(prefix.size()) >= k && completes_occurrence();
      if (!bad) extend();
      prefix.pop_back();
      used[v] = false;
    }
  }

  // Count completions of prefixes starting with first value v.
  std::uint64_t count_block(int v) {
    used[v] = true;
    prefix.push_back(v);
    extend();
    prefix.pop_back();
    used[v] = false;
    std::uint64_t c = count;
    count = 0;
    return c;
  }
};

}  // namespace

mpz_class count_avoiders(const Permutation& pi, int n, int threads) {
  if (n < 1) throw std::invalid_argument("count_avoiders needs n >= 1");
  if (n > 20) throw std::invalid_argument("count limited to n <= 20");
  const std::vector<int>& t = pi.images();
  if (pi.size() == 1) return 0;  // every nonempty permutation contains (1)
  if (pi.size() > n) return factorial(n);
  threads = std::clamp(threads, 1, n);
  std::vector<std::uint64_t> block(n + 1, 0);
  auto work = [&](int lo, int hi) {
    AvoiderCount ac(t, n);
    for (int v = lo; v <= hi; ++v) block[v] = ac.count_block(v);
  };
  if (threads == 1) {
    work(1, n);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back(work, 1 + w * n / threads, (w + 1) * n / threads);
    for (auto& th : pool) th.join();
  }
  mpz_class total = 0;
  for (int v = 1; v <= n; ++v) total += block[v];
  return total;
}

CountSeries sw_estimate(const Permutation& pi, int nmax, int threads) {
  if (nmax < 1) throw std::invalid_argument("sw_estimate needs nmax >= 1");
  CountSeries s;
  bool any_positive = false;
  for (int n = 1; n <= nmax; ++n) {
    mpz_class c = count_avoiders(pi, n, threads);
    s.roots.push_back(floor_nth_root_scaled(c, n));
    // The displayed root is already truncated downward, so reusing it keeps
    // the certificate honest.
    if (!any_positive || s.roots.back() > s.lower_bound)
      s.lower_bound = s.roots.back();
    any_positive = true;
    s.counts.push_back(std::move(c));
  }
  return s;
}

}  // namespace pavoid
