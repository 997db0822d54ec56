#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pavoid/bignum.hpp"
#include "pavoid/bounds.hpp"
#include "pavoid/constructions.hpp"
#include "pavoid/counting.hpp"
#include "pavoid/errors.hpp"
#include "pavoid/highdim.hpp"
#include "pavoid/oracle.hpp"
#include "pavoid/rng.hpp"

using namespace pavoid;

namespace {

DDimPermutation incomparable_pair() {
  return DDimPermutation(3, {{1, 1, 2}, {2, 2, 1}});
}

DDimPermutation random_ddim(int d, int n, SplitMix64& gen) {
  std::vector<Permutation> layers;
  for (int a = 2; a <= d; ++a) layers.push_back(random_permutation(n, gen));
  return DDimPermutation::from_layers(layers);
}

}  // namespace

TEST_CASE("point validation and canonical order") {
  DDimPermutation p(3, {{2, 2, 1}, {1, 1, 2}});
  CHECK(p.dim() == 3);
  CHECK(p.size() == 2);
  CHECK(p.point(1) == std::vector<int>{1, 1, 2});  // sorted by axis 1
  CHECK(p == incomparable_pair());
  CHECK(p.layer(2) == Permutation({1, 2}));
  CHECK(p.layer(3) == Permutation({2, 1}));

  CHECK(DDimPermutation::identity(3, 2) ==
        DDimPermutation(3, {{1, 1, 1}, {2, 2, 2}}));
  CHECK(DDimPermutation::from_layers({Permutation({1, 2}), Permutation({2, 1})}) ==
        incomparable_pair());

  CHECK_THROWS_AS(DDimPermutation(1, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(DDimPermutation(3, {{1, 1}, {2, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DDimPermutation(3, {{1, 1, 1}, {2, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DDimPermutation(3, {{1, 1, 3}, {2, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(DDimPermutation::from_layers({}), std::invalid_argument);
}

TEST_CASE("ddim binary matrix storage") {
  DDimBinaryMatrix m(3, {2, 3, 2});
  CHECK(m.one_count() == 0);
  m.set({1, 3, 2}, true);
  m.set({2, 1, 1}, true);
  CHECK(m.get({1, 3, 2}));
  CHECK_FALSE(m.get({1, 1, 1}));
  CHECK(m.one_count() == 2);
  m.set({1, 3, 2}, false);
  CHECK(m.one_count() == 1);
  CHECK_THROWS_AS(m.set({1, 4, 1}, true), std::invalid_argument);
  CHECK_THROWS_AS(m.get({0, 1, 1}), std::invalid_argument);

  DDimBinaryMatrix f = DDimBinaryMatrix::from_points({2, 2, 2},
                                                     {{1, 1, 2}, {2, 2, 1}});
  CHECK(f.one_count() == 2);
  CHECK(f.get({2, 2, 1}));
}

TEST_CASE("containment between ddim permutations") {
  DDimPermutation i32 = DDimPermutation::identity(3, 2);
  CHECK(contains_dd(i32, i32));
  CHECK_FALSE(contains_dd(incomparable_pair(), i32));
  CHECK(contains_dd(DDimPermutation::identity(3, 5), DDimPermutation::identity(3, 3)));
  CHECK(contains_dd(incomparable_pair(), incomparable_pair()));

  // Any single point embeds anywhere.
  CHECK(contains_dd(incomparable_pair(), DDimPermutation(3, {{1, 1, 1}})));

  DDimPermutation flat(2, {{1, 2}, {2, 1}});
  CHECK_THROWS_AS(contains_dd(i32, flat), std::invalid_argument);
}

TEST_CASE("containment matches the subset oracle on sparse hosts") {
  SplitMix64 gen(0xD1CE);
  std::vector<DDimPermutation> pats = {
      DDimPermutation::identity(3, 2), incomparable_pair(),
      DDimPermutation(3, {{1, 2, 2}, {2, 1, 1}}),
      DDimPermutation(3, {{1, 2, 1}, {2, 1, 2}})};
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<int> sizes{3 + static_cast<int>(gen.bounded(2)),
                           3 + static_cast<int>(gen.bounded(2)),
                           3 + static_cast<int>(gen.bounded(2))};
    DDimBinaryMatrix host(3, sizes);
    for (int tries = 0; tries < 10; ++tries) {
      std::vector<int> pos{1 + static_cast<int>(gen.bounded(sizes[0])),
                           1 + static_cast<int>(gen.bounded(sizes[1])),
                           1 + static_cast<int>(gen.bounded(sizes[2]))};
      host.set(pos, true);
    }
    for (const DDimPermutation& p : pats)
      CHECK(contains_dd(host, p) == oracle::contains_dd_bruteforce(host, p));
  }
}

TEST_CASE("avoider counts") {
  DDimPermutation i32 = DDimPermutation::identity(3, 2);
  CHECK(count_avoiders_dd(i32, 2) == 3);
  CHECK(count_avoiders_dd(DDimPermutation::identity(3, 4), 3) == 36);  // k > n
  CHECK(count_avoiders_dd(i32, 4, 3) == count_avoiders_dd(i32, 4, 1));

  // Against antichain probabilities on the same sample space.
  for (int n = 1; n <= 4; ++n) {
    mpq_class q = antichain_probability_exact(3, n);
    mpz_class perms = factorial(n) * factorial(n);
    mpq_class expect = q * mpq_class(perms);
    CHECK(mpq_class(count_avoiders_dd(i32, n)) == expect);
  }
}

TEST_CASE("all-matrix avoider counts") {
  Permutation flat_i2 = Permutation::identity(2);
  DDimPermutation i22(2, {{1, 1}, {2, 2}});
  CHECK(count_all_avoiders_dd(i22, 2) == 12);
  CHECK(count_all_avoiders_dd(i22, 1) == 2);
  CHECK(count_all_avoiders_dd(DDimPermutation::identity(3, 2), 1) == 2);

  // Expansion-style cap: permutation avoiders at size t*u are at most
  // t^(d n) times all-matrix avoiders at size u, here t = u = 2, d = 2.
  mpz_class lhs = count_avoiders(flat_i2, 4);
  CHECK(lhs <= 256 * count_all_avoiders_dd(i22, 2));

  // Direct recount of the 3-dimensional 2x2x2 case.
  DDimPermutation i32 = DDimPermutation::identity(3, 2);
  mpz_class direct = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::vector<std::vector<int>> pts;
    for (int b = 0; b < 8; ++b)
      if (mask >> b & 1)
        pts.push_back({1 + (b >> 2 & 1), 1 + (b >> 1 & 1), 1 + (b & 1)});
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = 0; j < pts.size() && ok; ++j)
        if (pts[i][0] < pts[j][0] && pts[i][1] < pts[j][1] && pts[i][2] < pts[j][2])
          ok = false;
    if (ok) ++direct;
  }
  CHECK(count_all_avoiders_dd(i32, 2) == direct);

  CHECK_THROWS_AS(count_all_avoiders_dd(i22, 5), SizeLimitError);
  CHECK_THROWS_AS(count_all_avoiders_dd(i32, 3), SizeLimitError);
}

TEST_CASE("antichain probabilities") {
  CHECK(antichain_probability_exact(3, 2) == mpq_class(3, 4));
  CHECK(antichain_probability_exact(2, 2) == mpq_class(1, 2));
  CHECK(antichain_probability_exact(2, 3) == mpq_class(1, 6));
  CHECK(antichain_probability_exact(3, 1) == 1);

  // The reversal-derived order is always an antichain.
  CHECK(is_antichain(DDimPermutation::from_layers({Permutation::reversal(4),
                                                   Permutation::reversal(4)})));
  CHECK_FALSE(is_antichain(DDimPermutation::identity(3, 2)));

  // Lower bound from the formula catalog; its value is rounded down, so the
  // exact probability must dominate it after dividing by n!.
  for (int n = 2; n <= 5; ++n) {
    mpq_class q = antichain_probability_exact(3, n);
    BoundValue bw = eval_bound("brightwell", {{"d", 3}, {"n", n}});
    REQUIRE(bw.value.has_value());
    CHECK(q >= *bw.value / mpq_class(factorial(n)));
  }

  SplitMix64 gen(0xACE);
  McEstimate mc = antichain_probability_mc(3, 4, 100000, gen);
  mpq_class exact = antichain_probability_exact(3, 4);
  double diff = mc.value - exact.get_d();
  if (diff < 0) diff = -diff;
  CHECK(diff <= 3 * mc.std_error + 1e-12);
}

TEST_CASE("monotone subpattern extraction") {
  // Already monotone: returned whole.
  DDimPermutation mono(3, {{1, 4, 1}, {2, 3, 2}, {3, 2, 3}, {4, 1, 4}});
  MonotoneSub self = monotone_subpattern(mono);
  CHECK(self.sub == mono);
  CHECK(self.positions == std::vector<int>{1, 2, 3, 4});

  // Every planar 5-permutation yields a monotone pattern of size >= 3.
  std::vector<int> img(5);
  std::iota(img.begin(), img.end(), 1);
  do {
    DDimPermutation p = DDimPermutation::from_layers({Permutation(img)});
    MonotoneSub s = monotone_subpattern(p);
    CHECK(s.sub.size() >= 3);
    CHECK(contains_dd(p, s.sub));
    // Monotone along axis 2: all rises or all falls.
    bool inc = true, dec = true;
    for (int i = 2; i <= s.sub.size(); ++i) {
      if (s.sub.point(i)[1] < s.sub.point(i - 1)[1]) inc = false;
      if (s.sub.point(i)[1] > s.sub.point(i - 1)[1]) dec = false;
    }
    CHECK((inc || dec));
    // The sub is exactly the reranked restriction to the returned positions.
    CHECK(s.sub.layer(2) == restriction(p.layer(2), s.positions));
  } while (std::next_permutation(img.begin(), img.end()));

  SplitMix64 gen(0x3355);
  for (int trial = 0; trial < 20; ++trial) {
    DDimPermutation p = random_ddim(3, 16, gen);
    MonotoneSub s = monotone_subpattern(p);
    CHECK(s.sub.size() >= 2);
    CHECK(contains_dd(p, s.sub));
    for (int axis = 1; axis <= 2; ++axis) {
      bool inc = true, dec = true;
      for (int i = 2; i <= s.sub.size(); ++i) {
        if (s.sub.point(i)[axis] < s.sub.point(i - 1)[axis]) inc = false;
        if (s.sub.point(i)[axis] > s.sub.point(i - 1)[axis]) dec = false;
      }
      CHECK((inc || dec));
    }
  }
}

TEST_CASE("guaranteed monotone size") {
  CHECK(min_monotone_size(2, 1) == 1);
  CHECK(min_monotone_size(2, 4) == 2);
  CHECK(min_monotone_size(2, 5) == 3);
  CHECK(min_monotone_size(2, 9) == 3);
  CHECK(min_monotone_size(2, 10) == 4);
  CHECK(min_monotone_size(3, 16) == 2);
  CHECK(min_monotone_size(3, 17) == 3);
  CHECK(min_monotone_size(4, 256) == 2);
  CHECK(min_monotone_size(20, 1000000) == 2);
}

TEST_CASE("merging incomparable parts") {
  // One part: a relabeling.
  DDimPermutation part = incomparable_pair();
  DDimPermutation same = merge_avoiders({part}, {{1, 1}, {1, 1}, {1, 1}});
  CHECK(same == part);

  // Two parts, all 6^3 ownership choices: never the increasing triple.
  std::vector<std::vector<int>> slots;
  std::vector<int> base{1, 1, 2, 2};
  std::sort(base.begin(), base.end());
  do slots.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  REQUIRE(slots.size() == 6);
  DDimPermutation i33 = DDimPermutation::identity(3, 3);
  for (const auto& a : slots)
    for (const auto& b : slots)
      for (const auto& c : slots) {
        DDimPermutation merged = merge_avoiders({part, part}, {a, b, c});
        CHECK(merged.size() == 4);
        CHECK_FALSE(contains_dd(merged, i33));
      }

  // Bad ownership multiplicities and comparable parts are rejected.
  CHECK_THROWS_AS(merge_avoiders({part, part}, {{1, 1, 1, 2}, base, base}),
                  std::invalid_argument);
  CHECK_THROWS_AS(merge_avoiders({DDimPermutation::identity(3, 2)},
                                 {{1, 1}, {1, 1}, {1, 1}}),
                  std::invalid_argument);

  SplitMix64 a(31415), b(31415);
  std::vector<DDimPermutation> parts{part, part, part};
  CHECK(merge_avoiders_random(parts, a) == merge_avoiders_random(parts, b));
}

TEST_CASE("monotone two-point classes count alike") {
  // All four monotone 2-point 3-dimensional patterns avoid in equal numbers.
  std::vector<DDimPermutation> monos;
  for (int s2 = 0; s2 < 2; ++s2)
    for (int s3 = 0; s3 < 2; ++s3) {
      Permutation l2 = s2 ? Permutation::reversal(2) : Permutation::identity(2);
      Permutation l3 = s3 ? Permutation::reversal(2) : Permutation::identity(2);
      monos.push_back(DDimPermutation::from_layers({l2, l3}));
    }
  for (int n = 1; n <= 4; ++n) {
    mpz_class base = count_avoiders_dd(monos[0], n);
    for (const DDimPermutation& m : monos)
      CHECK(count_avoiders_dd(m, n) == base);
  }
}
