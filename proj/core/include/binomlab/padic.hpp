#pragma once

#include <cstddef>
#include <vector>

#include "binomlab/exact.hpp"

namespace binomlab {

// A prime power q = p^m0. Primality of p is checked at construction.
struct PrimePower {
  unsigned p;
  unsigned m0;
  unsigned long q;

  PrimePower(unsigned p_, unsigned m0_);
  static PrimePower prime(unsigned p_) { return PrimePower(p_, 1); }

  bool operator==(const PrimePower& o) const {
    return p == o.p && m0 == o.m0;
  }
};

bool is_prime(unsigned long n);

// Little-endian base-`base` digits of n >= 0; n = 0 yields {0}.
std::vector<unsigned long> digits_of(const ExactInt& n, unsigned long base);

// Inverse of digits_of.
ExactInt from_digits(const std::vector<unsigned long>& digits,
                     unsigned long base);

// Sum of base-q digits of n.
ExactInt ell_q(const ExactInt& n, unsigned long q);

// Trace of base-`base` schoolbook addition.
struct CarryRecord {
  std::vector<std::size_t> positions;  // digit indices with carry-out 1
  std::size_t carry_count() const { return positions.size(); }
};

CarryRecord carries_adding(const ExactInt& a, const ExactInt& b,
                           unsigned long base);

// Lucas: C(n,k) mod p = prod_i C(n_i, k_i) mod p over base-p digits.
unsigned long lucas_binomial_mod_p(const ExactInt& n, const ExactInt& k,
                                   unsigned p);
unsigned long lucas_binomial_mod_p(unsigned long n, unsigned long k,
                                   unsigned p);

// Kummer: v_p(C(n,k)) = number of carries when adding k and n-k in base p.
// Requires 0 <= k <= n.
std::size_t kummer_valuation(const ExactInt& n, const ExactInt& k, unsigned p);

// Oracle-side valuation by repeated division; v_p(0) is not defined here.
std::size_t padic_valuation(const ExactInt& n, unsigned long p);

// A p-adic (or q-adic) integer known to `precision` digits. Digits are
// little-endian: digit i is the coefficient of q^i. Operations that would
// need digits beyond the stored precision throw instead of padding.
class PAdicTrunc {
 public:
  PAdicTrunc(PrimePower base, std::vector<unsigned long> digits);

  // Embeds an integer at the given precision. Negative n embeds as the
  // digits of q^N + n (complement form), requiring -n <= q^N.
  static PAdicTrunc embed(const ExactInt& n, PrimePower base,
                          std::size_t precision);

  const PrimePower& base() const { return base_; }
  std::size_t precision() const { return digits_.size(); }
  unsigned long digit(std::size_t i) const { return digits_.at(i); }
  const std::vector<unsigned long>& digits() const { return digits_; }

  // Value as a nonnegative integer in [0, q^precision).
  ExactInt value() const;

  // Truncated addition (mod q^precision); precisions must match.
  PAdicTrunc add(const PAdicTrunc& other) const;

  bool operator==(const PAdicTrunc& o) const {
    return base_ == o.base_ && digits_ == o.digits_;
  }

 private:
  PrimePower base_;
  std::vector<unsigned long> digits_;
};

// C(y,k) mod p for a truncated q-adic y, defined by the Lucas product
// over base-q digit pairs (valid mod p since q is a p-power). Requires
// k < q^precision(y).
unsigned long binomial_mod_p_padic(const PAdicTrunc& y, const ExactInt& k);

}  // namespace binomlab
