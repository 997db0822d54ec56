#include "pavoid/bignum.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace pavoid {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpq_class pow_q(const mpq_class& base, unsigned long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

long ceil_log_ratio(unsigned long u, const mpq_class& q) {
  if (u < 2) throw std::domain_error("ceil_log_ratio needs u >= 2");
  mpq_class inv_u(1, u);
  if (q <= inv_u || q >= 1)
    throw std::domain_error("q must lie strictly between 1/u and 1");
  // q^i <= 1/u  <=>  num^i * u <= den^i, monotone in i.
  const mpz_class num = q.get_num(), den = q.get_den();
  auto small_enough = [&](long i) {
    return pow_z(num, i) * static_cast<unsigned long>(u) <= pow_z(den, i);
  };
  double est = std::log(static_cast<double>(u)) /
               -std::log(mpq_get_d(q.get_mpq_t()));
  long hi = std::max<long>(1, static_cast<long>(est) + 2);
  while (!small_enough(hi)) hi *= 2;
  long lo = 0;  // q^0 = 1 > 1/u
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (small_enough(mid) ? hi : lo) = mid;
  }
  return hi;
}

mpq_class floor_nth_root_scaled(const mpz_class& c, unsigned long n, unsigned digits) {
  if (sgn(c) < 0) throw std::domain_error("root of a negative value");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class shifted = c * pow_z(scale, n);
  mpz_class root;
  mpz_root(root.get_mpz_t(), shifted.get_mpz_t(), n);
  mpq_class r(root, scale);
  r.canonicalize();
  return r;
}

double log2_of(const mpq_class& v) {
  if (sgn(v) <= 0) throw std::domain_error("log2 of a nonpositive value");
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, v.get_mpq_t(), MPFR_RNDN);
  mpfr_log2(x, x, MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("-0123456789") != std::string::npos ||
        digits.find('-', 1) != std::string::npos)
      throw std::invalid_argument("bad decimal: " + s);
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
  }
  try {
    mpq_class r(s);
    // Canonicalizing a zero denominator would divide by zero, not throw.
    if (sgn(r.get_den()) <= 0) throw std::invalid_argument("bad rational");
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: " + s);
  }
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();  // inputs built from raw num/den pairs may not be reduced
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_power_of_two(unsigned long v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace pavoid
