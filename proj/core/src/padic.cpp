#include "binomlab/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace binomlab {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower::PrimePower(unsigned p_, unsigned m0_) : p(p_), m0(m0_) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePower: p not prime");
  if (m0 < 1) throw std::invalid_argument("PrimePower: m0 must be >= 1");
  q = 1;
  for (unsigned i = 0; i < m0; ++i) {
    if (q > (1ul << 62) / p) throw std::overflow_error("PrimePower: q overflow");
    q *= p;
  }
}

std::vector<unsigned long> digits_of(const ExactInt& n, unsigned long base) {
  if (n < 0) throw std::invalid_argument("digits_of: n must be >= 0");
  if (base < 2) throw std::invalid_argument("digits_of: base must be >= 2");
  if (n == 0) return {0};
  std::vector<unsigned long> digits;
  ExactInt rest = n;
  while (rest > 0) {
    digits.push_back(mpz_fdiv_ui(rest.get_mpz_t(), base));
    rest = rest / static_cast<long>(base);
  }
  return digits;
}

ExactInt from_digits(const std::vector<unsigned long>& digits,
                     unsigned long base) {
  ExactInt n = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    n *= static_cast<long>(base);
    n += static_cast<long>(*it);
  }
  return n;
}

ExactInt ell_q(const ExactInt& n, unsigned long q) {
  ExactInt sum = 0;
  for (unsigned long d : digits_of(n, q)) sum += static_cast<long>(d);
  return sum;
}

CarryRecord carries_adding(const ExactInt& a, const ExactInt& b,
                           unsigned long base) {
  auto da = digits_of(a, base);
  auto db = digits_of(b, base);
  std::size_t len = std::max(da.size(), db.size());
  CarryRecord rec;
  unsigned long carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    unsigned long s = carry;
    if (i < da.size()) s += da[i];
    if (i < db.size()) s += db[i];
    carry = s / base;
    if (carry) rec.positions.push_back(i);
  }
  return rec;
}

namespace {

// C(n,k) mod p for single digits 0 <= n,k < some small bound.
unsigned long small_binomial_mod(unsigned long n, unsigned long k, unsigned p) {
  if (k > n) return 0;
  // Pascal row, reduced mod p as we go.
  std::vector<unsigned long> row(k + 1, 0);
  row[0] = 1;
  for (unsigned long i = 1; i <= n; ++i)
    for (unsigned long j = std::min(i, k); j >= 1; --j)
      row[j] = (row[j] + row[j - 1]) % p;
  return row[k];
}

}  // namespace

unsigned long lucas_binomial_mod_p(const ExactInt& n, const ExactInt& k,
                                   unsigned p) {
  if (n < 0 || k < 0) throw std::invalid_argument("lucas: n, k must be >= 0");
  if (!is_prime(p)) throw std::invalid_argument("lucas: p not prime");
  auto dn = digits_of(n, p);
  auto dk = digits_of(k, p);
  unsigned long prod = 1;
  for (std::size_t i = 0; i < dk.size() && prod != 0; ++i) {
    unsigned long ni = i < dn.size() ? dn[i] : 0;
    prod = (prod * small_binomial_mod(ni, dk[i], p)) % p;
  }
  return prod;
}

unsigned long lucas_binomial_mod_p(unsigned long n, unsigned long k,
                                   unsigned p) {
  unsigned long prod = 1;
  while (k != 0 && prod != 0) {
    prod = (prod * small_binomial_mod(n % p, k % p, p)) % p;
    n /= p;
    k /= p;
  }
  return prod;
}

std::size_t kummer_valuation(const ExactInt& n, const ExactInt& k, unsigned p) {
  if (k < 0 || k > n) throw std::invalid_argument("kummer: need 0 <= k <= n");
  return carries_adding(k, n - k, p).carry_count();
}

std::size_t padic_valuation(const ExactInt& n, unsigned long p) {
  if (n == 0) throw std::domain_error("padic_valuation: v_p(0) undefined");
  ExactInt rest = abs(n);
  std::size_t v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    rest /= static_cast<long>(p);
    ++v;
  }
  return v;
}

PAdicTrunc::PAdicTrunc(PrimePower base, std::vector<unsigned long> digits)
    : base_(base), digits_(std::move(digits)) {
  if (digits_.empty())
    throw std::invalid_argument("PAdicTrunc: precision must be >= 1");
  for (unsigned long d : digits_)
    if (d >= base_.q)
      throw std::invalid_argument("PAdicTrunc: digit out of range");
}

PAdicTrunc PAdicTrunc::embed(const ExactInt& n, PrimePower base,
                             std::size_t precision) {
  if (precision < 1)
    throw std::invalid_argument("PAdicTrunc::embed: precision must be >= 1");
  ExactInt qn = 1;
  for (std::size_t i = 0; i < precision; ++i) qn *= static_cast<long>(base.q);
  ExactInt v = n;
  if (v < 0) {
    v += qn;
    if (v < 0)
      throw std::invalid_argument("PAdicTrunc::embed: |n| exceeds q^precision");
  }
  if (v >= qn)
    throw std::invalid_argument("PAdicTrunc::embed: n exceeds q^precision");
  auto digits = digits_of(v, base.q);
  digits.resize(precision, 0);
  return PAdicTrunc(base, std::move(digits));
}

ExactInt PAdicTrunc::value() const { return from_digits(digits_, base_.q); }

PAdicTrunc PAdicTrunc::add(const PAdicTrunc& other) const {
  if (!(base_ == other.base_) || precision() != other.precision())
    throw std::invalid_argument("PAdicTrunc::add: base/precision mismatch");
  std::vector<unsigned long> out(precision());
  unsigned long carry = 0;
  for (std::size_t i = 0; i < precision(); ++i) {
    unsigned long s = digits_[i] + other.digits_[i] + carry;
    out[i] = s % base_.q;
    carry = s / base_.q;
  }
  return PAdicTrunc(base_, std::move(out));
}

unsigned long binomial_mod_p_padic(const PAdicTrunc& y, const ExactInt& k) {
  if (k < 0) throw std::invalid_argument("binomial_mod_p_padic: k must be >= 0");
  const unsigned long q = y.base().q;
  const unsigned p = y.base().p;
  auto dk = digits_of(k, q);
  if (dk.size() > y.precision() && !(k == 0))
    throw std::invalid_argument(
        "binomial_mod_p_padic: k needs more digits of y than stored");
  unsigned long prod = 1;
  for (std::size_t i = 0; i < dk.size() && prod != 0; ++i) {
    unsigned long yi = y.digit(i);
    if (dk[i] > yi) return 0;
    // Digit binomial reduced mod p (digits are < q, still small).
    unsigned long c = 1;
    for (unsigned long j = 1; j <= dk[i]; ++j) {
      // C(yi, j) built multiplicatively stays integral at each step.
      c = c * (yi - j + 1) / j;
    }
    prod = (prod * (c % p)) % p;
  }
  return prod;
}

}  // namespace binomlab
