#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pavoid/bignum.hpp"
#include "pavoid/constructions.hpp"
#include "pavoid/errors.hpp"
#include "pavoid/permutation.hpp"
#include "pavoid/repetition.hpp"

using namespace pavoid;

namespace {

// Reference recomputation straight from the definition.
int max_repetition_naive(const Permutation& p) {
  int best = 0;
  for (int i1 = 1; i1 <= p.size(); ++i1)
    for (int j1 = i1 + 1; j1 <= p.size(); ++j1) {
      int d = j1 - i1, dp = p.image(j1) - p.image(i1);
      int count = 0;
      for (int i2 = 1; i2 <= p.size(); ++i2)
        for (int j2 = i2 + 1; j2 <= p.size(); ++j2)
          if (j2 - i2 == d && p.image(j2) - p.image(i2) == dp) ++count;
      best = std::max(best, count);
    }
  return best;
}

}  // namespace

TEST_CASE("distance histogram") {
  DistanceHistogram h = distance_histogram(Permutation::identity(3));
  CHECK(h.counts.size() == 2);
  CHECK(h.counts.at({1, 1}) == 2);
  CHECK(h.counts.at({2, 2}) == 1);
  CHECK(h.total() == 3);

  DistanceHistogram r = distance_histogram(Permutation::reversal(3));
  CHECK(r.counts.at({1, -1}) == 2);
  CHECK(r.counts.at({2, -2}) == 1);

  for (int k = 2; k <= 9; ++k) {
    DistanceHistogram d = distance_histogram(Permutation::identity(k));
    CHECK(d.counts.at({1, 1}) == static_cast<std::uint64_t>(k - 1));
    CHECK(d.total() == static_cast<std::uint64_t>(k) * (k - 1) / 2);
  }

  // No zero row or column distances ever appear.
  SplitMix64 gen(8);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation p = random_permutation(2 + gen.bounded(7), gen);
    DistanceHistogram d = distance_histogram(p);
    CHECK(d.total() == static_cast<std::uint64_t>(p.size()) * (p.size() - 1) / 2);
    for (const auto& [vec, cnt] : d.counts) {
      CHECK(vec.first >= 1);
      CHECK(vec.second != 0);
      CHECK(cnt >= 1);
    }
  }
}

TEST_CASE("max repetition") {
  CHECK(max_repetition(Permutation::identity(9)) == 8);
  CHECK(max_repetition(Permutation({1, 2})) == 1);
  CHECK(max_repetition(Permutation({2, 1})) == 1);
  CHECK(max_repetition(Permutation({2, 4, 1, 3})) == 2);
  CHECK_THROWS_AS(max_repetition(Permutation({1})), std::invalid_argument);

  SplitMix64 gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    Permutation p = random_permutation(2 + gen.bounded(6), gen);
    CHECK(max_repetition(p) == max_repetition_naive(p));
  }
}

TEST_CASE("dihedral images preserve max repetition") {
  SplitMix64 gen(77);
  for (int trial = 0; trial < 60; ++trial) {
    Permutation p = random_permutation(2 + gen.bounded(6), gen);
    int base = max_repetition(p);
    CHECK(max_repetition(p.inverse()) == base);
    CHECK(max_repetition(Permutation::from_matrix(p.matrix().flip_rows())) == base);
    CHECK(max_repetition(Permutation::from_matrix(p.matrix().rotate90())) == base);
  }
}

TEST_CASE("scattered threshold and test") {
  // 4 log2(9) / log2(log2(9)) ~ 7.62 rounds up to 8.
  CHECK(scattered_threshold(9) == 8);
  CHECK_FALSE(is_scattered(Permutation::identity(9)));
  // 16 = 2^(2^2) hits the integer value 4*4/2 = 8 exactly.
  CHECK(scattered_threshold(16) == 8);
  CHECK(scattered_threshold(4) == 8);
  // 4 log2(3) / log2(log2(3)) ~ 9.55.
  CHECK(scattered_threshold(3) == 10);
  CHECK_THROWS_AS(scattered_threshold(2), std::domain_error);
  CHECK_THROWS_AS(is_scattered(Permutation({2, 1})), std::domain_error);

  // Thresholds bracket the real value: r0-1 < theta <= r0.
  for (int k = 3; k <= 4096; k = k * 2 + 1) {
    double theta = 4 * std::log2(k) / std::log2(std::log2(k));
    int r0 = scattered_threshold(k);
    CHECK(r0 >= theta - 1e-9);
    CHECK(r0 - 1 < theta + 1e-9);
  }

  // Below the threshold every permutation is scattered.
  for (int k = 3; k <= 7; ++k) {
    CHECK(scattered_threshold(k) > k - 1);
    CHECK(is_scattered(Permutation::identity(k)));
  }
}

TEST_CASE("full census exact values") {
  FullCensus c3 = full_census(3);
  CHECK(c3.with_repetition == std::vector<std::uint64_t>{6, 2});
  CHECK(c3.per_vector_max == std::vector<std::uint64_t>{3, 1});
  CHECK(c3.scattered_count == 6);

  FullCensus c4 = full_census(4);
  CHECK(c4.with_repetition[0] == 24);
  CHECK(per_vector_census(4, 3) == 1);  // only the two monotone extremes, one per vector

  CHECK(repetition_census(3) == c3.with_repetition);
  CHECK_THROWS_AS(full_census(9), SizeLimitError);
  CHECK_THROWS_AS(per_vector_census(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(per_vector_census(3, 0), std::invalid_argument);
}

TEST_CASE("census against direct recount") {
  for (int k = 3; k <= 6; ++k) {
    FullCensus c = full_census(k, 2);
    std::vector<std::uint64_t> naive(k - 1, 0);
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    do {
      int m = max_repetition_naive(Permutation(img));
      for (int r = 1; r <= std::min(m, k - 1); ++r) ++naive[r - 1];
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK(c.with_repetition == naive);
    // Monotone nonincreasing in r; r = 1 counts every permutation.
    CHECK(c.with_repetition[0] == factorial(k));
    for (int r = 2; r < k; ++r)
      CHECK(c.with_repetition[r - 1] <= c.with_repetition[r - 2]);
  }
}

TEST_CASE("census respects the closed-form caps") {
  for (int k = 3; k <= 7; ++k) {
    FullCensus c = full_census(k, 2);
    for (int r = 1; r <= k - 1; ++r) {
      mpz_class cap_pair = 2 * mpz_class(k) * k * factorial(k) / factorial(r);
      CHECK(mpz_class(c.with_repetition[r - 1]) <= cap_pair);
      mpz_class cap_vec = factorial(k) / factorial(r);
      CHECK(mpz_class(c.per_vector_max[r - 1]) <= cap_vec);
    }
  }
}

TEST_CASE("threaded census matches single threaded") {
  for (int k : {5, 7}) {
    FullCensus a = full_census(k, 1);
    FullCensus b = full_census(k, 4);
    CHECK(a.with_repetition == b.with_repetition);
    CHECK(a.per_vector_max == b.per_vector_max);
    CHECK(a.scattered_count == b.scattered_count);
  }
}

TEST_CASE("scattered fraction monte carlo") {
  McEstimate one = scattered_fraction_mc(7, 1, 5);
  CHECK((one.value == 0.0 || one.value == 1.0));
  CHECK(scattered_fraction_mc(7, 500, 99).value ==
        scattered_fraction_mc(7, 500, 99).value);

  // k = 7: every permutation is scattered (threshold 8 > 6), so the
  // exhaustive fraction is 1 and the estimator must agree within 3 sigma.
  FullCensus c7 = full_census(7, 2);
  double exact = static_cast<double>(c7.scattered_count) / 5040.0;
  McEstimate mc = scattered_fraction_mc(7, 2000, 4242);
  CHECK(std::abs(mc.value - exact) <= 3 * mc.std_error + 1e-12);

  // At k = 8 the identity still squeaks by: repetition 7 < threshold 8.
  CHECK(is_scattered(Permutation::identity(8)));
}
