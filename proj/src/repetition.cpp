#include "pavoid/repetition.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "pavoid/errors.hpp"
#include "pavoid/rng.hpp"

namespace pavoid {

std::uint64_t DistanceHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [v, c] : counts) t += c;
  return t;
}

DistanceHistogram distance_histogram(const Permutation& p) {
  DistanceHistogram h;
  int k = p.size();
  for (int i1 = 1; i1 <= k; ++i1)
    for (int i2 = i1 + 1; i2 <= k; ++i2)
      ++h.counts[{i2 - i1, p.image(i2) - p.image(i1)}];
  return h;
}

namespace {

// Flat histogram buffer for hot loops: vector (d, dp) with d in 1..k-1,
// dp in -(k-1)..k-1 maps to d*(2k+1) + dp + k.
struct FlatHist {
  int k, stride;
  std::vector<std::uint8_t> counts;
  std::vector<int> touched;

  explicit FlatHist(int k)
      : k(k), stride(2 * k + 1), counts(static_cast<std::size_t>(k) * stride, 0) {
    touched.reserve(k * (k - 1) / 2);
  }

  int fill(const std::vector<int>& img) {  // returns max repetition
    for (int idx : touched) counts[idx] = 0;
    touched.clear();
    int best = 0;
    for (int i1 = 0; i1 < k; ++i1)
      for (int i2 = i1 + 1; i2 < k; ++i2) {
        int idx = (i2 - i1) * stride + (img[i2] - img[i1]) + k;
        if (counts[idx]++ == 0) touched.push_back(idx);
        best = std::max(best, static_cast<int>(counts[idx]));
      }
    return best;
  }
};

}  // namespace

int max_repetition(const Permutation& p) {
  if (p.size() < 2)
    throw std::invalid_argument("max_repetition needs at least two points");
  FlatHist h(p.size());
  return h.fill(p.images());
}

namespace {

// theta = 4 log2 k / log2 log2 k can only be an integer when log2 k is
// rational, i.e. k = 2^j, and then only when log2 j is rational too, i.e.
// j = 2^i (theta = 4j/i). For every other k, log2 k (or log2 j) is
// irrational -- transcendental in fact, by Gelfond-Schneider -- so theta
// cannot hit an integer and interval arithmetic at growing precision must
// eventually separate it from one.
int threshold_mpfr(int k) {
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    mpfr_t lo, hi, t;
    mpfr_inits2(prec, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
    // lower bound of theta
    mpfr_set_ui(lo, k, MPFR_RNDD);
    mpfr_log2(lo, lo, MPFR_RNDD);
    mpfr_mul_ui(lo, lo, 4, MPFR_RNDD);
    mpfr_set_ui(t, k, MPFR_RNDU);
    mpfr_log2(t, t, MPFR_RNDU);
    mpfr_log2(t, t, MPFR_RNDU);
    mpfr_div(lo, lo, t, MPFR_RNDD);
    // upper bound of theta
    mpfr_set_ui(hi, k, MPFR_RNDU);
    mpfr_log2(hi, hi, MPFR_RNDU);
    mpfr_mul_ui(hi, hi, 4, MPFR_RNDU);
    mpfr_set_ui(t, k, MPFR_RNDD);
    mpfr_log2(t, t, MPFR_RNDD);
    mpfr_log2(t, t, MPFR_RNDD);
    mpfr_div(hi, hi, t, MPFR_RNDU);
    long clo = mpfr_get_si(lo, MPFR_RNDU);  // toward +inf, i.e. ceil
    long chi = mpfr_get_si(hi, MPFR_RNDU);
    mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
    if (clo == chi) return static_cast<int>(clo);  // ceil(theta) pinned down
  }
  throw std::logic_error("scattered threshold did not separate from an integer");
}

}  // namespace

int scattered_threshold(int k) {
  if (k < 3)
    throw std::domain_error("scattered threshold undefined for k < 3 "
                            "(log2 log2 k is nonpositive)");
  // Exact rational path: k = 2^j with j = 2^i gives theta = 4j/i.
  if ((k & (k - 1)) == 0) {
    int j = std::countr_zero(static_cast<unsigned>(k));
    if ((j & (j - 1)) == 0 && j > 1) {
      int i = std::countr_zero(static_cast<unsigned>(j));
      return (4 * j + i - 1) / i;  // ceil(4j/i); exact when i | 4j
    }
    // k = 2: excluded above. j not a power of two: fall through to mpfr.
  }
  return threshold_mpfr(k);
}

bool is_scattered(const Permutation& p) {
  if (p.size() < 3)
    throw std::domain_error("scatteredness undefined for k < 3");
  return max_repetition(p) < scattered_threshold(p.size());
}

namespace {

constexpr int kCensusLimit = 8;

// Runs fn on every permutation of [k] with first image fixed to each value in
// [first_lo, first_hi]; lexicographic within a block.
template <typename Fn>
void for_each_perm_block(int k, int first_lo, int first_hi, Fn&& fn) {
  std::vector<int> img(k);
  for (int f = first_lo; f <= first_hi; ++f) {
    img[0] = f;
    int at = 1;
    for (int v = 1; v <= k; ++v)
      if (v != f) img[at++] = v;
    do {
      fn(img);
    } while (std::next_permutation(img.begin() + 1, img.end()));
  }
}

struct CensusAccum {
  std::vector<std::uint64_t> max_rep_hist;           // index = max repetition
  std::vector<std::vector<std::uint64_t>> vec_rep;   // [flat vector][r-1]

  CensusAccum(int k, int flat_size)
      : max_rep_hist(k, 0),
        vec_rep(flat_size, std::vector<std::uint64_t>(std::max(1, k - 1), 0)) {}

  void merge(const CensusAccum& o) {
    for (std::size_t i = 0; i < max_rep_hist.size(); ++i)
      max_rep_hist[i] += o.max_rep_hist[i];
    for (std::size_t v = 0; v < vec_rep.size(); ++v)
      for (std::size_t r = 0; r < vec_rep[v].size(); ++r)
        vec_rep[v][r] += o.vec_rep[v][r];
  }
};

}  // namespace

FullCensus full_census(int k, int threads) {
  if (k < 2) throw std::invalid_argument("census needs k >= 2");
  if (k > kCensusLimit)
    throw SizeLimitError("exhaustive census limited to k <= " +
                         std::to_string(kCensusLimit) +
                         "; use scattered_fraction_mc for larger k");
  int flat_size = k * (2 * k + 1);
  threads = std::clamp(threads, 1, k);

  // Partition the k! orders by first image; merge order is fixed, so the
  // result is independent of the thread count.
  std::vector<CensusAccum> parts;
  parts.reserve(threads);
  for (int t = 0; t < threads; ++t) parts.emplace_back(k, flat_size);
  auto work = [&](int t) {
    int lo = 1 + t * k / threads, hi = (t + 1) * k / threads;
    FlatHist h(k);
    CensusAccum& acc = parts[t];
    for_each_perm_block(k, lo, hi, [&](const std::vector<int>& img) {
      int mr = h.fill(img);
      ++acc.max_rep_hist[mr];
      for (int idx : h.touched) {
        int c = h.counts[idx];
        for (int r = 1; r <= c && r <= k - 1; ++r) ++acc.vec_rep[idx][r - 1];
      }
    });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  CensusAccum total(k, flat_size);
  for (const auto& p : parts) total.merge(p);

  FullCensus out;
  out.k = k;
  out.with_repetition.assign(k - 1, 0);
  for (int r = 1; r <= k - 1; ++r) {
    std::uint64_t n = 0;
    for (int m = r; m <= k - 1; ++m) n += total.max_rep_hist[m];
    out.with_repetition[r - 1] = n;
  }
  out.per_vector_max.assign(k - 1, 0);
  for (int r = 1; r <= k - 1; ++r)
    for (int v = 0; v < flat_size; ++v)
      out.per_vector_max[r - 1] =
          std::max(out.per_vector_max[r - 1], total.vec_rep[v][r - 1]);
  int r0 = (k >= 3) ? scattered_threshold(k) : 0;
  std::uint64_t scattered = 0;
  for (int m = 0; m <= k - 1; ++m)
    if (k >= 3 && m < r0) scattered += total.max_rep_hist[m];
  out.scattered_count = scattered;
  return out;
}

std::vector<std::uint64_t> repetition_census(int k, int threads) {
  return full_census(k, threads).with_repetition;
}

std::uint64_t per_vector_census(int k, int r) {
  if (r < 1 || r > k - 1)
    throw std::invalid_argument("per-vector census needs 1 <= r <= k-1");
  return full_census(k).per_vector_max[r - 1];
}

McEstimate scattered_fraction_mc(int k, std::uint64_t samples, std::uint64_t seed) {
  if (k < 3) throw std::domain_error("scatteredness undefined for k < 3");
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  int r0 = scattered_threshold(k);
  SplitMix64 g(seed);
  FlatHist h(k);
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 1);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    shuffle(img, g);
    if (h.fill(img) < r0) ++hits;
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return {p, se, hits, samples};
}

}  // namespace pavoid
