#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pavoid {

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class pow_z(const mpz_class& base, unsigned long e);
mpq_class pow_q(const mpq_class& base, unsigned long e);

// Smallest integer i >= 1 with q^i <= 1/u, i.e. ceil(-log u / log q), for
// q in (1/u, 1). Exact: a floating estimate brackets the answer and integer
// power comparisons settle it. Throws std::domain_error outside (1/u, 1).
long ceil_log_ratio(unsigned long u, const mpq_class& q);

// floor(c^(1/n) * 10^digits) / 10^digits as an exact rational; c >= 0.
mpq_class floor_nth_root_scaled(const mpz_class& c, unsigned long n,
                                unsigned digits = 6);

// log2 of a positive rational, good to well under 1e-9 (MPFR at 256 bits).
double log2_of(const mpq_class& v);

// Parse "3", "1/2" or "0.25" into an exact rational.
mpq_class parse_rational(const std::string& s);
std::string rational_to_string(const mpq_class& q);  // "n" or "n/d"

bool is_power_of_two(unsigned long v);

}  // namespace pavoid
