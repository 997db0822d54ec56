#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pavoid {

// Evaluated bound formula. `value` is exact for the combinatorial formulas
// (integers/rationals computed in arbitrary precision); for formulas with
// transcendental parts it is the MPFR result rounded in the formula's safe
// direction (up for upper bounds, down for lower bounds) and is therefore a
// dyadic rational on the safe side of the true value. `log2` is a double
// rendering of log2(value), good to 1e-9 for values below 2^1024; for
// astronomically large values `value` is omitted and log2 is computed
// directly from the formula.
struct BoundValue {
  std::string name;
  std::map<std::string, std::string> params;
  std::optional<mpq_class> value;
  double log2 = 0.0;
};

// Catalog names: marcus_tardos(k), klazar(c), fox_legacy(k), jk_minor(k),
// framework(u,q), repfree_exponent(k,r), scattered_count(k,r),
// grid_rhs(k,l,m,exQ), xmatrix_rhs(k), frk_closed(r,k,t,s),
// highdim_lower(d,k,n), brightwell(d,n).
// Unknown name or out-of-domain parameters throw std::invalid_argument /
// std::domain_error with the violated constraint spelled out.
BoundValue eval_bound(const std::string& name,
                      const std::map<std::string, mpq_class>& params);

std::vector<std::string> bound_catalog();

// Density-decay schedule: q_i = max(1/u, q^i) with the bound h^i, emitted
// for i = 1..min(imax, i0) where i0 = ceil(-log u / log q) is the first
// index where q^i reaches 1/u. Requires q in (1/u, 1).
struct CascadeRow {
  long i;
  mpq_class qi;
  mpz_class bound;  // h^i
};

struct CascadeResult {
  std::vector<CascadeRow> rows;
  long i0;
};

CascadeResult density_cascade(unsigned long u, const mpq_class& q,
                              unsigned long h, long imax);

// Two-parameter recurrence f(r,k,t,s) <= 2 f(r,k,t/2,s) + 2 f(r,k-1,t/2,s/2)
// with f = 0 for s > t and f(r,1,t,s) = r-1, unfolded exactly for
// power-of-two t and s. `value` is min(recurrence, closed form); on the
// closed form's domain (t >= s >= 2^(k-1)) the recurrence never exceeds it,
// which is asserted.
struct FrkResult {
  mpz_class recurrence;
  std::optional<mpq_class> closed;
  mpz_class value;
};

FrkResult frk_recurrence(long r, long k, unsigned long t, unsigned long s);

// One step of the blow-up recursion:
// ex(s-1) * ex(n) + ex(t) * n * (f + g). The t parameter is carried for
// context only; the step's value does not depend on it directly.
mpz_class mt_recursion_step(const mpz_class& exP_sm1, const mpz_class& exP_n,
                            const mpz_class& exP_t, const mpz_class& fval,
                            const mpz_class& gval, long t, long n);

}  // namespace pavoid
