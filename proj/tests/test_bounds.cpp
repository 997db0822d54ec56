#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pavoid/bignum.hpp"
#include "pavoid/bounds.hpp"
#include "pavoid/extremal.hpp"

using namespace pavoid;

namespace {

mpq_class val(const std::string& name, const std::map<std::string, mpq_class>& params) {
  BoundValue b = eval_bound(name, params);
  REQUIRE(b.value.has_value());
  return *b.value;
}

}  // namespace

TEST_CASE("catalog spot values") {
  CHECK(val("marcus_tardos", {{"k", 2}}) == 192);
  CHECK(val("marcus_tardos", {{"k", 3}}) == 2 * 81 * binomial(9, 3));
  CHECK(val("klazar", {{"c", 3}}) == 3375);
  CHECK(val("fox_legacy", {{"k", 1}}) == 768);
  CHECK(val("jk_minor", {{"k", 2}}) == 6144);
  CHECK(val("framework", {{"u", 4}, {"q", mpq_class(1, 2)}}) == 2048);
  CHECK(val("scattered_count", {{"k", 5}, {"r", 3}}) == 1000);
  CHECK(val("grid_rhs", {{"k", 2}, {"l", 2}, {"m", 2}, {"exQ", 5}}) == 56);
  CHECK(val("xmatrix_rhs", {{"k", 6}}) == 142);
  CHECK(val("frk_closed", {{"r", 3}, {"k", 3}, {"t", 16}, {"s", 4}}) == 768);
}

TEST_CASE("catalog log2 values agree with the exact results") {
  for (const auto& [name, params] :
       std::map<std::string, std::map<std::string, mpq_class>>{
           {"marcus_tardos", {{"k", 4}}},
           {"klazar", {{"c", 10}}},
           {"jk_minor", {{"k", 8}}},
           {"scattered_count", {{"k", 8}, {"r", 2}}}}) {
    BoundValue b = eval_bound(name, params);
    REQUIRE(b.value.has_value());
    CHECK(b.log2 == doctest::Approx(log2_of(*b.value)).epsilon(1e-9));
  }
}

TEST_CASE("transcendental formulas round toward the safe side") {
  // Lower-bound formulas round down; compare against a double evaluation.
  BoundValue bw = eval_bound("brightwell", {{"d", 3}, {"n", 2}});
  REQUIRE(bw.value.has_value());
  double truth = std::pow(std::exp(-2.0) * std::pow(2.0, 0.5), 2.0);
  CHECK(bw.value->get_d() <= truth + 1e-15);
  CHECK(bw.value->get_d() == doctest::Approx(truth).epsilon(1e-9));

  BoundValue hd = eval_bound("highdim_lower", {{"d", 3}, {"k", 2}, {"n", 2}});
  REQUIRE(hd.value.has_value());
  double truth2 = std::pow(1 / (std::exp(1.0) * 2), 4.0) * std::pow(1 / std::exp(1.5), 2.0);
  CHECK(hd.value->get_d() <= truth2 + 1e-18);
  CHECK(hd.value->get_d() == doctest::Approx(truth2).epsilon(1e-9));
  CHECK(hd.log2 == doctest::Approx(std::log2(truth2)).epsilon(1e-6));

  // An upper-bound formula with transcendental parts rounds up.
  BoundValue rf = eval_bound("repfree_exponent", {{"k", 9}, {"r", 3}});
  REQUIRE(rf.value.has_value());
  double truth3 = 1 + 4 * std::log2(36.0) +
                  34 * std::cbrt(3.0) * std::pow(9.0, 2.0 / 3) * std::log2(36.0) * std::log2(36.0);
  CHECK(rf.value->get_d() >= truth3 - 1e-9);
  CHECK(rf.value->get_d() == doctest::Approx(truth3).epsilon(1e-9));
}

TEST_CASE("huge values keep only the exponent") {
  // u = 2^30 with q just under 1 pushes u^(e+3) far past any sane integer
  // size; the evaluator must fall back to the exponent-only rendering.
  mpq_class q(4095, 4096);
  BoundValue big = eval_bound("framework", {{"u", 1073741824}, {"q", q}});
  CHECK_FALSE(big.value.has_value());
  long e = ceil_log_ratio(1073741824UL, q);
  CHECK(e > 80000);
  CHECK(big.log2 == doctest::Approx(1 + (e + 3) * 30.0).epsilon(1e-9));
}

TEST_CASE("bignum helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(4, 6) == 0);
  CHECK(pow_z(3, 5) == 243);
  CHECK(pow_q(mpq_class(2, 3), 3) == mpq_class(8, 27));

  CHECK(ceil_log_ratio(4, mpq_class(1, 2)) == 2);
  CHECK(ceil_log_ratio(8, mpq_class(1, 2)) == 3);
  CHECK(ceil_log_ratio(4, mpq_class(2, 3)) == 4);
  CHECK(ceil_log_ratio(9, mpq_class(1, 3)) == 2);
  CHECK_THROWS_AS(ceil_log_ratio(4, mpq_class(1, 4)), std::domain_error);

  // floor(sqrt(2) * 10^6) / 10^6.
  CHECK(floor_nth_root_scaled(2, 2) == mpq_class(1414213, 1000000));
  CHECK(floor_nth_root_scaled(8, 3) == 2);

  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("-7") == -7);
  CHECK(rational_to_string(mpq_class(6, 4)) == "3/2");
  CHECK(rational_to_string(mpq_class(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);

  CHECK(is_power_of_two(1));
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_FALSE(is_power_of_two(12));

  CHECK(log2_of(mpq_class(8)) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(log2_of(mpq_class(1, 2)) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(eval_bound("no_such_formula", {}), std::invalid_argument);
  CHECK_THROWS_AS(eval_bound("marcus_tardos", {}), std::invalid_argument);
  CHECK_THROWS_AS(eval_bound("framework", {{"u", 4}, {"q", mpq_class(1, 8)}}),
                  std::domain_error);
  CHECK_THROWS_AS(eval_bound("framework", {{"u", 4}, {"q", 2}}), std::domain_error);
  CHECK_THROWS_AS(eval_bound("scattered_count", {{"k", 5}, {"r", 6}}),
                  std::domain_error);
  CHECK_THROWS_AS(eval_bound("xmatrix_rhs", {{"k", 8}}), std::domain_error);
  CHECK_THROWS_AS(eval_bound("frk_closed", {{"r", 3}, {"k", 3}, {"t", 12}, {"s", 4}}),
                  std::domain_error);
  CHECK(bound_catalog().size() == 12);
}

TEST_CASE("improved minor bound beats the legacy bound") {
  for (unsigned k = 4; k <= 64; ++k)
    CHECK(val("jk_minor", {{"k", k}}) < val("fox_legacy", {{"k", k}}));
}

TEST_CASE("framework value is nondecreasing in q") {
  std::map<std::string, mpq_class> p{{"u", 4}, {"q", 0}};
  double prev = 0;
  for (int num = 2; num <= 7; ++num) {
    p["q"] = mpq_class(num, 8);  // 1/4 excluded: q must exceed 1/u
    if (p["q"] <= mpq_class(1, 4)) continue;
    BoundValue b = eval_bound("framework", p);
    CHECK(b.log2 >= prev);
    prev = b.log2;
  }
}

TEST_CASE("grid bound stays below the density target") {
  // With exQ = c*(ml-1), m >= 2c/l and c >= 3 the right-hand side is at most
  // (mkl)^2 (1 - 1/(9k)).
  for (long k = 2; k <= 16; ++k)
    for (long l = 2; l <= 16; ++l)
      for (long c = 3; c <= 64; c += 7) {
        long m = (2 * c + l - 1) / l;
        mpq_class exquot = mpq_class(c) * (m * l - 1);
        mpq_class rhs = val("grid_rhs", {{"k", k}, {"l", l}, {"m", m}, {"exQ", exquot}});
        mpq_class cap = mpq_class(m * k * l) * (m * k * l) *
                        (mpq_class(9 * k - 1) / (9 * k));
        CHECK(rhs <= cap);
      }
}

TEST_CASE("density cascade") {
  CascadeResult c = density_cascade(4, mpq_class(1, 2), 2, 10);
  CHECK(c.i0 == 2);
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[0].qi == mpq_class(1, 2));
  CHECK(c.rows[0].bound == 2);
  CHECK(c.rows[1].qi == mpq_class(1, 4));
  CHECK(c.rows[1].bound == 4);

  CascadeResult c8 = density_cascade(8, mpq_class(1, 2), 3, 10);
  CHECK(c8.i0 == 3);
  REQUIRE(c8.rows.size() == 3);
  CHECK(c8.rows[2].qi == mpq_class(1, 8));
  CHECK(c8.rows[2].bound == 27);

  CascadeResult trunc = density_cascade(8, mpq_class(1, 2), 3, 2);
  CHECK(trunc.i0 == 3);
  CHECK(trunc.rows.size() == 2);

  CHECK_THROWS_AS(density_cascade(4, mpq_class(1, 4), 2, 10), std::domain_error);
  CHECK_THROWS_AS(density_cascade(4, 1, 2, 10), std::domain_error);

  // Successive ratios never fall below q.
  for (unsigned long u : {4UL, 8UL, 16UL})
    for (int num = 1; num <= 3; ++num) {
      mpq_class q(num, 4);
      if (q <= mpq_class(1, static_cast<long>(u))) continue;
      CascadeResult sweep = density_cascade(u, q, 2, 20);
      for (std::size_t i = 1; i < sweep.rows.size(); ++i)
        CHECK(sweep.rows[i].qi / sweep.rows[i - 1].qi >= q);
    }
}

TEST_CASE("two-parameter recurrence") {
  CHECK(frk_recurrence(5, 1, 16, 1).recurrence == 4);
  CHECK(frk_recurrence(5, 1, 16, 16).recurrence == 4);
  CHECK(frk_recurrence(3, 3, 4, 8).recurrence == 0);
  CHECK_FALSE(frk_recurrence(3, 3, 4, 8).closed.has_value());

  FrkResult f = frk_recurrence(3, 3, 16, 4);
  REQUIRE(f.closed.has_value());
  CHECK(*f.closed == 768);
  CHECK(f.recurrence <= 768);
  CHECK(f.value == f.recurrence);

  // One unfolding step, recomputed from the two sub-instances.
  mpz_class lhs = frk_recurrence(3, 3, 16, 4).recurrence;
  mpz_class rhs = 2 * frk_recurrence(3, 3, 8, 4).recurrence +
                  2 * frk_recurrence(3, 2, 8, 2).recurrence;
  CHECK(lhs == rhs);

  CHECK_THROWS_AS(frk_recurrence(3, 3, 12, 4), std::invalid_argument);
  CHECK_THROWS_AS(frk_recurrence(0, 1, 4, 4), std::invalid_argument);
}

TEST_CASE("blow-up recursion step") {
  CHECK(mt_recursion_step(0, 0, 0, 0, 0, 4, 3) == 0);

  // Exact small values feed one chain step; the result stays above the
  // staircase lower estimate for the blown-up size.
  Permutation i2 = Permutation::identity(2);
  mpz_class ex1(static_cast<long>(ex_exact(1, i2).value)),
      ex3(static_cast<long>(ex_exact(3, i2).value)),
      ex4(static_cast<long>(ex_exact(4, i2).value));
  mpz_class f(static_cast<long>(row_density_extremal(i2, 4, 2).value));
  mpz_class step = mt_recursion_step(ex1, ex3, ex4, f, f, 4, 3);
  CHECK(step == 131);
  CHECK(step >= 23);

  // The second term is linear in n.
  mpz_class at6 = mt_recursion_step(ex1, ex3, ex4, f, f, 4, 6);
  CHECK(at6 - ex1 * ex3 == 2 * (step - ex1 * ex3));
}
