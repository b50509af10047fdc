#include "binomlab/exact.hpp"

#include <stdexcept>
#include <vector>

namespace binomlab {

ExactInt binomial(const ExactInt& n, const ExactInt& k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: n, k must be >= 0");
  if (k > n) return 0;
  if (!k.fits_ulong_p()) throw std::invalid_argument("binomial: k out of range");
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

ExactRational binomial_poly(const ExactRational& s, unsigned long k) {
  ExactRational c = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    ExactRational factor = s - ExactRational(static_cast<long>(i) - 1);
    factor /= static_cast<long>(i);
    c *= factor;
  }
  c.canonicalize();
  return c;
}

ExactRational binomial_expand(const ExactRational& x, const ExactRational& y,
                              unsigned long n) {
  ExactRational sum = 0;
  // Walk x^k up and y^{n-k} down in one pass.
  ExactRational xk = 1;
  std::vector<ExactRational> ypow(n + 1);
  ypow[0] = 1;
  for (unsigned long i = 1; i <= n; ++i) ypow[i] = ypow[i - 1] * y;
  for (unsigned long k = 0; k <= n; ++k) {
    ExactRational term = xk * ypow[n - k];
    term *= ExactRational(binomial(ExactInt(static_cast<long>(n)),
                                   ExactInt(static_cast<long>(k))));
    sum += term;
    xk *= x;
  }
  sum.canonicalize();
  return sum;
}

ExactRational binomial_series_partial(const ExactRational& s,
                                      const ExactRational& x, unsigned long N) {
  ExactRational sum = 0;
  ExactRational coeff = 1;  // C(s,0)
  ExactRational xk = 1;
  for (unsigned long k = 0; k <= N; ++k) {
    sum += coeff * xk;
    ExactRational factor = s - ExactRational(static_cast<long>(k));
    factor /= static_cast<long>(k + 1);
    coeff *= factor;
    xk *= x;
  }
  sum.canonicalize();
  return sum;
}

ExactRational binomial_series_partial_int(long n, const ExactRational& x,
                                          const ExactRational& y,
                                          unsigned long N) {
  ExactRational sum = 0;
  for (unsigned long k = 0; k <= N; ++k) {
    ExactRational term = binomial_poly(ExactRational(n), k);
    if (term == 0) continue;
    term *= rational_pow(x, static_cast<long>(k));
    term *= rational_pow(y, n - static_cast<long>(k));
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

ExactRational rational_pow(const ExactRational& x, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (x == 0) throw std::domain_error("rational_pow: 0 to negative power");
    return rational_pow(1 / x, -e);
  }
  ExactRational r = 1, base = x;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r *= base;
    base *= base;
    u >>= 1;
  }
  r.canonicalize();
  return r;
}

ExactInt parse_int(const std::string& s) {
  ExactInt n;
  if (n.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
  return n;
}

ExactRational parse_rational(const std::string& s) {
  ExactRational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactInt& n) { return n.get_str(); }

std::string to_string(const ExactRational& r) { return r.get_str(); }

}  // namespace binomlab
