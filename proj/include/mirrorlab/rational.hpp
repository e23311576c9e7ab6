#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

namespace mirrorlab {

/// Exact rational coefficients are GMP rationals, always kept canonical
/// (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q" or "p" with optional leading '-' (a Unicode minus sign is
/// accepted too). Throws ParseError on anything else, including q <= 0.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& x);

/// Sentinel returned by padic_val(0, p).
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

/// Exact p-adic valuation of x; kValInfinity for x = 0.
long padic_val(const Rational& x, unsigned long p);

/// True when padic_val(x, p) >= 0, i.e. p does not divide the denominator.
bool is_p_integral(const Rational& x, unsigned long p);

/// Deterministic trial-division primality test for word-sized inputs.
bool is_prime(unsigned long n);

/// Primes in [2, bound], ascending.
std::vector<unsigned long> primes_up_to(unsigned long bound);

/// Inverse of a modulo m (gcd(a, m) = 1, m >= 1). Result in [0, m).
unsigned long mod_inverse(unsigned long a, unsigned long m);

} // namespace mirrorlab
