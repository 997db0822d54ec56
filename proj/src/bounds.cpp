#include "pavoid/bounds.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

#include "pavoid/bignum.hpp"

namespace pavoid {

namespace {

constexpr mpfr_prec_t kPrec = 256;
// Exact values wider than this render log2 only.
constexpr std::size_t kValueBitLimit = 1u << 20;

long need_long(const std::map<std::string, mpq_class>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing parameter " + key);
  const mpq_class& q = it->second;
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::invalid_argument("parameter " + key + " must be a machine integer");
  return q.get_num().get_si();
}

mpq_class need_rational(const std::map<std::string, mpq_class>& params,
                        const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing parameter " + key);
  return it->second;
}

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

// RAII mpfr scratch register.
struct Real {
  mpfr_t x;
  Real() { mpfr_init2(x, kPrec); }
  explicit Real(const Real& o) { mpfr_init2(x, kPrec); mpfr_set(x, o.x, MPFR_RNDN); }
  ~Real() { mpfr_clear(x); }
  Real& operator=(const Real&) = delete;
};

mpq_class to_rational(const Real& r) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), r.x);
  q.canonicalize();
  return q;
}

BoundValue exact_result(std::string name, std::map<std::string, std::string> p,
                        const mpq_class& v) {
  BoundValue b;
  b.name = std::move(name);
  b.params = std::move(p);
  b.log2 = log2_of(v);
  if (mpz_sizeinbase(v.get_num().get_mpz_t(), 2) <= kValueBitLimit &&
      mpz_sizeinbase(v.get_den().get_mpz_t(), 2) <= kValueBitLimit)
    b.value = v;
  return b;
}

BoundValue rounded_result(std::string name, std::map<std::string, std::string> p,
                          const Real& v) {
  BoundValue b;
  b.name = std::move(name);
  b.params = std::move(p);
  b.value = to_rational(v);
  Real l;
  mpfr_log2(l.x, v.x, MPFR_RNDN);
  b.log2 = mpfr_get_d(l.x, MPFR_RNDN);
  return b;
}

std::map<std::string, std::string> render(const std::map<std::string, mpq_class>& params) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : params) out[k] = rational_to_string(v);
  return out;
}

}  // namespace

BoundValue eval_bound(const std::string& name,
                      const std::map<std::string, mpq_class>& params) {
  auto rendered = render(params);

  if (name == "marcus_tardos") {
    long k = need_long(params, "k");
    check(k >= 1, "marcus_tardos needs k >= 1");
    mpq_class v = 2 * pow_z(mpz_class(k), 4) *
                  binomial(static_cast<unsigned long>(k) * k, k);
    return exact_result(name, rendered, v);
  }

  if (name == "klazar") {
    long c = need_long(params, "c");
    check(c >= 0, "klazar needs c >= 0");
    if (c > (1 << 18)) {  // value astronomically large: log2 only
      BoundValue b;
      b.name = name;
      b.params = rendered;
      b.log2 = static_cast<double>(c) * std::log2(15.0);
      return b;
    }
    return exact_result(name, rendered, pow_z(15, c));
  }

  if (name == "fox_legacy") {
    long k = need_long(params, "k");
    check(k >= 1, "fox_legacy needs k >= 1");
    return exact_result(name, rendered, 3 * mpz_class(k) * pow_z(2, 8 * k));
  }

  if (name == "jk_minor") {
    long k = need_long(params, "k");
    check(k >= 1, "jk_minor needs k >= 1");
    mpq_class v(8 * mpz_class(k + 1) * (k + 1) * pow_z(2, 4 * k), 3);
    v.canonicalize();
    return exact_result(name, rendered, v);
  }

  if (name == "framework") {
    long u = need_long(params, "u");
    check(u >= 2, "framework needs u >= 2");
    mpq_class q = need_rational(params, "q");
    check(q > mpq_class(1, u) && q < 1, "framework needs q in (1/u, 1)");
    long e = ceil_log_ratio(u, q);
    double lg_u = std::log2(static_cast<double>(u));
    if ((static_cast<double>(e) + 3.0) * lg_u + 1.0 > kValueBitLimit) {
      BoundValue b;  // u^(e+3) too wide to materialize; exponent arithmetic
      b.name = name;
      b.params = rendered;
      b.log2 = 1.0 + (static_cast<double>(e) + 3.0) * lg_u;
      return b;
    }
    mpq_class v = 2 * pow_z(mpz_class(u), 3) * pow_z(mpz_class(u), e);
    return exact_result(name, rendered, v);
  }

  if (name == "repfree_exponent") {
    long k = need_long(params, "k"), r = need_long(params, "r");
    check(k >= 9 && r >= 3, "repfree_exponent needs k >= 9 and r >= 3");
    // 1 + 4 log2(4k) + 34 r^(1/3) k^(2/3) log2(4k)^2, rounded up throughout
    // (the formula is an exponent of an upper bound).
    Real lg, t, acc;
    mpfr_set_ui(lg.x, 4 * static_cast<unsigned long>(k), MPFR_RNDU);
    mpfr_log2(lg.x, lg.x, MPFR_RNDU);
    mpfr_set_ui(acc.x, 1, MPFR_RNDU);
    mpfr_mul_ui(t.x, lg.x, 4, MPFR_RNDU);
    mpfr_add(acc.x, acc.x, t.x, MPFR_RNDU);
    Real cube;
    mpfr_set_ui(cube.x, static_cast<unsigned long>(r), MPFR_RNDU);
    mpfr_rootn_ui(cube.x, cube.x, 3, MPFR_RNDU);  // r^(1/3)
    Real k23;
    mpfr_set_ui(k23.x, static_cast<unsigned long>(k) * k, MPFR_RNDU);
    mpfr_rootn_ui(k23.x, k23.x, 3, MPFR_RNDU);    // k^(2/3)
    mpfr_mul(t.x, cube.x, k23.x, MPFR_RNDU);
    mpfr_mul_ui(t.x, t.x, 34, MPFR_RNDU);
    mpfr_mul(t.x, t.x, lg.x, MPFR_RNDU);
    mpfr_mul(t.x, t.x, lg.x, MPFR_RNDU);
    mpfr_add(acc.x, acc.x, t.x, MPFR_RNDU);
    return rounded_result(name, rendered, acc);
  }

  if (name == "scattered_count") {
    long k = need_long(params, "k"), r = need_long(params, "r");
    check(k >= 1 && r >= 1 && r <= k, "scattered_count needs 1 <= r <= k");
    mpq_class v(2 * mpz_class(k) * k * factorial(k), factorial(r));
    v.canonicalize();
    return exact_result(name, rendered, v);
  }

  if (name == "grid_rhs") {
    long k = need_long(params, "k"), l = need_long(params, "l");
    long m = need_long(params, "m");
    mpq_class exq = need_rational(params, "exQ");
    check(k >= 2 && l >= 2 && m >= 1, "grid_rhs needs k, l >= 2 and m >= 1");
    check(exq >= 0, "grid_rhs needs exQ >= 0");
    mpz_class mt = mpz_class(m) * k * l;          // m * t with t = kl
    mpz_class ml1 = mpz_class(m) * l - 1;
    mpq_class v = mpq_class(mt * mt) - k * (mpq_class(ml1 * ml1) - exq);
    v.canonicalize();
    return exact_result(name, rendered, v);
  }

  if (name == "xmatrix_rhs") {
    long k = need_long(params, "k");
    if (k >= 2 && k % 2 == 0 && k % 6 != 0)
      throw std::domain_error(
          "xmatrix_rhs: size is even but not a multiple of 6; the k^2/18 "
          "deficiency term is only established for multiples of 6");
    check(k >= 6 && k % 6 == 0, "xmatrix_rhs needs k to be a multiple of 6");
    mpq_class v = mpq_class(4 * mpz_class(k) * k) - mpq_class(mpz_class(k) * k, 18);
    v.canonicalize();
    return exact_result(name, rendered, v);
  }

  if (name == "frk_closed") {
    long r = need_long(params, "r"), k = need_long(params, "k");
    long t = need_long(params, "t"), s = need_long(params, "s");
    check(r >= 1 && k >= 1, "frk_closed needs r, k >= 1");
    check(t >= 1 && s >= 1 && is_power_of_two(t) && is_power_of_two(s),
          "frk_closed needs t and s to be powers of two");
    check(t >= s, "frk_closed needs t >= s");
    check(k <= 62 && s >= (1L << (k - 1)), "frk_closed needs s >= 2^(k-1)");
    mpq_class ratio(t, s);
    ratio.canonicalize();
    mpq_class v = r * pow_z(2, 2 * k - 2) * ratio * ratio;
    v.canonicalize();
    return exact_result(name, rendered, v);
  }

  if (name == "highdim_lower") {
    long d = need_long(params, "d"), k = need_long(params, "k");
    long n = need_long(params, "n");
    check(d >= 2 && k >= 2 && n >= 1, "highdim_lower needs d, k >= 2 and n >= 1");
    // (1/(en))^(2k) * ((k-1)^(1/(d-1)) / e^(1+1/(d-1)))^n, rounded down
    // throughout (it multiplies a lower bound).
    Real en, first;
    mpfr_set_ui(en.x, 1, MPFR_RNDU);
    mpfr_exp(en.x, en.x, MPFR_RNDU);                   // e, rounded up
    mpfr_mul_ui(en.x, en.x, static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_ui_div(first.x, 1, en.x, MPFR_RNDD);          // 1/(en), down
    mpfr_pow_ui(first.x, first.x, 2 * static_cast<unsigned long>(k), MPFR_RNDD);
    Real num;
    mpfr_set_ui(num.x, static_cast<unsigned long>(k - 1), MPFR_RNDD);
    mpfr_rootn_ui(num.x, num.x, static_cast<unsigned long>(d - 1), MPFR_RNDD);
    Real expo, den;
    mpfr_set_ui(expo.x, 1, MPFR_RNDU);
    mpfr_div_ui(expo.x, expo.x, static_cast<unsigned long>(d - 1), MPFR_RNDU);
    mpfr_add_ui(expo.x, expo.x, 1, MPFR_RNDU);
    mpfr_exp(den.x, expo.x, MPFR_RNDU);                // e^(1+1/(d-1)), up
    Real frac;
    mpfr_div(frac.x, num.x, den.x, MPFR_RNDD);
    mpfr_pow_ui(frac.x, frac.x, static_cast<unsigned long>(n), MPFR_RNDD);
    Real v;
    mpfr_mul(v.x, first.x, frac.x, MPFR_RNDD);
    return rounded_result(name, rendered, v);
  }

  if (name == "brightwell") {
    long d = need_long(params, "d"), n = need_long(params, "n");
    check(d >= 2 && n >= 1, "brightwell needs d >= 2 and n >= 1");
    // (e^-2 * n^(1 - 1/(d-1)))^n, rounded down (lower-bound constant).
    Real base, npow, e2;
    mpfr_set_ui(e2.x, 2, MPFR_RNDD);
    mpfr_exp(e2.x, e2.x, MPFR_RNDU);                  // e^2, up
    Real expo;
    mpfr_set_si(expo.x, d - 2, MPFR_RNDD);            // 1 - 1/(d-1) = (d-2)/(d-1)
    mpfr_div_ui(expo.x, expo.x, static_cast<unsigned long>(d - 1), MPFR_RNDD);
    mpfr_set_ui(npow.x, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_pow(npow.x, npow.x, expo.x, MPFR_RNDD);      // n^((d-2)/(d-1)), down
    mpfr_div(base.x, npow.x, e2.x, MPFR_RNDD);
    Real v;
    mpfr_pow_ui(v.x, base.x, static_cast<unsigned long>(n), MPFR_RNDD);
    return rounded_result(name, rendered, v);
  }

  throw std::invalid_argument("unknown bound formula: " + name);
}

std::vector<std::string> bound_catalog() {
  return {"marcus_tardos", "klazar",       "fox_legacy",      "jk_minor",
          "framework",     "repfree_exponent", "scattered_count", "grid_rhs",
          "xmatrix_rhs",   "frk_closed",   "highdim_lower",   "brightwell"};
}

CascadeResult density_cascade(unsigned long u, const mpq_class& q,
                              unsigned long h, long imax) {
  if (u < 2) throw std::domain_error("cascade needs u >= 2");
  if (h < 1) throw std::domain_error("cascade needs h >= 1");
  if (imax < 1) throw std::invalid_argument("cascade needs imax >= 1");
  mpq_class inv_u(1, u);
  if (q <= inv_u)
    throw std::domain_error("cascade needs q > 1/u (otherwise the density "
                            "hypothesis forces a trivial pattern)");
  if (q >= 1) throw std::domain_error("cascade needs q < 1");
  CascadeResult res;
  res.i0 = ceil_log_ratio(u, q);
  mpq_class qi = 1;
  mpz_class hi = 1;
  for (long i = 1; i <= std::min(imax, res.i0); ++i) {
    qi *= q;
    hi *= h;
    mpq_class clamped = std::max(qi, inv_u);
    res.rows.push_back({i, clamped, hi});
  }
  return res;
}

namespace {

struct FrkKey {
  long k;
  unsigned long t, s;
  bool operator<(const FrkKey& o) const {
    if (k != o.k) return k < o.k;
    if (t != o.t) return t < o.t;
    return s < o.s;
  }
};

mpz_class frk_rec(long r, long k, unsigned long t, unsigned long s,
                  std::map<FrkKey, mpz_class>& memo) {
  if (s > t) return 0;
  if (k == 1) return r - 1;
  FrkKey key{k, t, s};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (t == 1 || s == 1 || t % 2 || s % 2)
    throw std::domain_error("recurrence reached an unsplittable (t, s); "
                            "start from powers of two with s >= 2^(k-1)");
  mpz_class v = 2 * frk_rec(r, k, t / 2, s, memo) +
                2 * frk_rec(r, k - 1, t / 2, s / 2, memo);
  memo.emplace(key, v);
  return v;
}

}  // namespace

FrkResult frk_recurrence(long r, long k, unsigned long t, unsigned long s) {
  if (r < 1 || k < 1) throw std::invalid_argument("frk needs r, k >= 1");
  if (!is_power_of_two(t) || !is_power_of_two(s))
    throw std::invalid_argument("frk needs power-of-two t and s");
  std::map<FrkKey, mpz_class> memo;
  FrkResult res;
  res.recurrence = frk_rec(r, k, t, s, memo);
  res.value = res.recurrence;
  bool closed_domain = t >= s && k <= 62 && s >= (1UL << (k - 1));
  if (closed_domain) {
    mpq_class ratio(static_cast<unsigned long>(t), static_cast<unsigned long>(s));
    ratio.canonicalize();
    mpq_class closed = r * pow_z(2, 2 * k - 2) * ratio * ratio;
    closed.canonicalize();
    if (mpq_class(res.recurrence) > closed)
      throw std::logic_error("recurrence exceeded its closed form");
    res.closed = closed;
    if (closed < mpq_class(res.value)) {
      // min() per contract; cannot happen given the assertion above, but the
      // contract says value = min(recurrence, closed).
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), closed.get_num().get_mpz_t(),
                 closed.get_den().get_mpz_t());
      res.value = fl;
    }
  }
  return res;
}

mpz_class mt_recursion_step(const mpz_class& exP_sm1, const mpz_class& exP_n,
                            const mpz_class& exP_t, const mpz_class& fval,
                            const mpz_class& gval, long t, long n) {
  if (n < 1 || t < 1) throw std::invalid_argument("step needs n, t >= 1");
  if (exP_sm1 < 0 || exP_n < 0 || exP_t < 0 || fval < 0 || gval < 0)
    throw std::invalid_argument("step needs nonnegative inputs");
  return exP_sm1 * exP_n + exP_t * n * (fval + gval);
}

}  // namespace pavoid
