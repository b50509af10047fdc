#pragma once

#include <gmpxx.h>

#include <string>

namespace binomlab {

// Arbitrary-precision integers and rationals. GMP keeps both in canonical
// form (sign-magnitude integers; reduced fractions with positive
// denominator), which is exactly the invariant we need.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

// C(n,k) = n!/(k!(n-k)!); returns 0 for k > n.
ExactInt binomial(const ExactInt& n, const ExactInt& k);

// The binomial polynomial C(s,k) = s(s-1)...(s-k+1)/k! for arbitrary
// rational s, computed by the multiplicative recurrence
// c_k = c_{k-1} * (s-k+1)/k.
ExactRational binomial_poly(const ExactRational& s, unsigned long k);

// Sum_k C(n,k) x^k y^{n-k}; equals (x+y)^n.
ExactRational binomial_expand(const ExactRational& x, const ExactRational& y,
                              unsigned long n);

// Partial sum Sum_{k=0}^{N} C(s,k) x^k, exact. Convergence is the
// caller's concern.
ExactRational binomial_series_partial(const ExactRational& s,
                                      const ExactRational& x, unsigned long N);

// Partial sum Sum_{k=0}^{N} C(n,k) x^k y^{n-k} for integer n of either
// sign (negative exponents on y allowed; y must be nonzero).
ExactRational binomial_series_partial_int(long n, const ExactRational& x,
                                          const ExactRational& y,
                                          unsigned long N);

// x^e with negative exponents via inversion; x must be nonzero when e < 0.
ExactRational rational_pow(const ExactRational& x, long e);

// Decimal-string round trips: "-123" for integers, "22/7" for rationals.
ExactInt parse_int(const std::string& s);
ExactRational parse_rational(const std::string& s);
std::string to_string(const ExactInt& n);
std::string to_string(const ExactRational& r);

}  // namespace binomlab
