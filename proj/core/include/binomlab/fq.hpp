#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "binomlab/report.hpp"

namespace binomlab {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

// F_q = F_p[z]/(modulus), q = p^m0. The modulus is monic of degree m0 and
// verified irreducible at construction by exhaustive trial division.
class FqField {
 public:
  // Searches monic polynomials over F_p in counting order and takes the
  // first irreducible of degree m0.
  static FqFieldPtr make(unsigned p, unsigned m0);
  // Caller-supplied modulus, little-endian coefficients mod p.
  static FqFieldPtr make(unsigned p, std::vector<unsigned> modulus);

  unsigned p() const { return p_; }
  unsigned m0() const { return m0_; }
  unsigned long q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool same(const FqField& o) const {
    return p_ == o.p_ && m0_ == o.m0_ && modulus_ == o.modulus_;
  }

 private:
  FqField(unsigned p, unsigned m0, std::vector<unsigned> modulus);
  unsigned p_, m0_;
  unsigned long q_;
  std::vector<unsigned> modulus_;
};

// An element of F_q: m0 residues mod p, little-endian in the generator z.
class FqElem {
 public:
  FqElem() = default;  // detached; usable only as a container placeholder
  FqElem(FqFieldPtr field, std::vector<unsigned> coeffs);

  static FqElem zero(FqFieldPtr f);
  static FqElem one(FqFieldPtr f);
  static FqElem from_int(FqFieldPtr f, long v);  // v mod p in the prime field
  // Elements are indexed 0..q-1 by reading the coefficient vector base p.
  static FqElem from_index(FqFieldPtr f, unsigned long index);
  unsigned long index() const;

  const FqFieldPtr& field() const { return field_; }
  const std::vector<unsigned>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem inverse() const;
  FqElem pow(unsigned long e) const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

 private:
  FqFieldPtr field_;
  std::vector<unsigned> coeffs_;
};

// Dense univariate polynomial over F_q in t, little-endian, trimmed
// (the zero polynomial has no coefficients).
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(FqFieldPtr field) : field_(std::move(field)) {}
  FqPoly(FqFieldPtr field, std::vector<FqElem> coeffs);

  static FqPoly constant(FqFieldPtr f, const FqElem& c);
  static FqPoly t(FqFieldPtr f);
  static FqPoly monomial(FqFieldPtr f, const FqElem& c, std::size_t deg);

  const FqFieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  FqElem coeff(std::size_t i) const;
  FqElem leading() const;
  const std::vector<FqElem>& coeffs() const { return coeffs_; }

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly operator*(const FqElem& c) const;
  std::pair<FqPoly, FqPoly> divrem(const FqPoly& divisor) const;
  FqPoly operator/(const FqPoly& o) const { return divrem(o).first; }
  FqPoly operator%(const FqPoly& o) const { return divrem(o).second; }
  FqPoly pow(unsigned long e) const;
  FqPoly make_monic() const;
  bool operator==(const FqPoly& o) const;
  bool operator!=(const FqPoly& o) const { return !(*this == o); }

  // "t^4+t" over prime fields; bracketed F_p-vectors as coefficients over
  // extensions, e.g. "[1,0]*t^2+[0,1]".
  std::string to_string() const;
  static FqPoly parse(FqFieldPtr f, const std::string& text);

 private:
  void trim();
  FqFieldPtr field_;
  std::vector<FqElem> coeffs_;
};

FqPoly fq_gcd(const FqPoly& a, const FqPoly& b);  // monic gcd

// The m-th polynomial in the canonical graded order: the base-q digits of
// m index the coefficients, so degree-< k polynomials are exactly the
// indices m < q^k.
FqPoly poly_at(const FqFieldPtr& f, unsigned long index);
unsigned long index_of_poly(const FqPoly& g);

// All q^k polynomials of degree < k, in canonical graded order.
std::vector<FqPoly> enumerate_polys(const FqFieldPtr& f, unsigned k,
                                    unsigned long budget = default_enumeration_budget());
// All q^k monic polynomials of degree exactly k.
std::vector<FqPoly> enumerate_monic(const FqFieldPtr& f, unsigned k,
                                    unsigned long budget = default_enumeration_budget());

FqPoly random_poly(const FqFieldPtr& f, unsigned max_deg, std::mt19937_64& rng);

// Sparse bivariate polynomial in (x,y) over F_q; no zero terms stored.
class FqBiPoly {
 public:
  explicit FqBiPoly(FqFieldPtr field) : field_(std::move(field)) {}

  static FqBiPoly x(FqFieldPtr f);
  static FqBiPoly y(FqFieldPtr f);
  static FqBiPoly constant(FqFieldPtr f, const FqElem& c);

  const FqFieldPtr& field() const { return field_; }
  void add_term(unsigned long i, unsigned long j, const FqElem& c);
  FqElem coeff(unsigned long i, unsigned long j) const;
  const std::map<std::pair<unsigned long, unsigned long>, FqElem>& terms()
      const {
    return terms_;
  }

  FqBiPoly operator+(const FqBiPoly& o) const;
  FqBiPoly operator*(const FqBiPoly& o) const;
  FqBiPoly pow(unsigned long e) const;
  bool operator==(const FqBiPoly& o) const;
  std::string to_string() const;

 private:
  FqFieldPtr field_;
  std::map<std::pair<unsigned long, unsigned long>, FqElem> terms_;
};

// Verifies (x+y)^p = x^p + y^p symbolically, (a+b)^p = a^p + b^p on random
// polynomial pairs, and a^q = a exhaustively over the field.
CheckReport frobenius_check(const FqFieldPtr& f, std::size_t samples,
                            unsigned long seed);

// Computes (x+y)^n both directly and as prod_k (x^{q^k}+y^{q^k})^{n_k}
// over the base-q digits of n; the two must agree.
FqBiPoly digit_factorization(unsigned long n, const FqFieldPtr& f,
                             unsigned long budget = default_enumeration_budget());

}  // namespace binomlab
