#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binomlab/fq.hpp"
#include "binomlab/report.hpp"

namespace binomlab {

// Dense polynomial in x with F_q[t] coefficients, little-endian in x.
class XPoly {
 public:
  explicit XPoly(FqFieldPtr field) : field_(std::move(field)) {}
  XPoly(FqFieldPtr field, std::vector<FqPoly> coeffs);

  static XPoly x(const FqFieldPtr& f);
  static XPoly constant(const FqPoly& c);

  const FqFieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FqPoly coeff(std::size_t i) const;
  const std::vector<FqPoly>& coeffs() const { return coeffs_; }

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator*(const FqPoly& s) const;
  XPoly pow(unsigned long e) const;
  FqPoly eval(const FqPoly& arg) const;
  bool operator==(const XPoly& o) const;
  bool operator!=(const XPoly& o) const { return !(*this == o); }

 private:
  void trim();
  FqFieldPtr field_;
  std::vector<FqPoly> coeffs_;
};

// Reduced fraction of F_q[t] polynomials; denominator monic.
struct FqRatio {
  FqPoly num, den;

  static FqRatio of(const FqPoly& n, const FqPoly& d);
  static FqRatio integral(const FqPoly& n);

  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den.is_one(); }

  FqRatio operator+(const FqRatio& o) const;
  FqRatio operator-(const FqRatio& o) const;
  FqRatio operator*(const FqRatio& o) const;
  FqRatio operator/(const FqRatio& o) const;
  bool operator==(const FqRatio& o) const {
    return num == o.num && den == o.den;
  }
};

// The Carlitz basis data up to index K: additive polynomials e_0..e_K
// (e_k = prod (x - alpha) over alpha of degree < k) and factorials
// D_k = e_k(t^k). Built by the defining product and cross-checked against
// the recursion e_{k+1} = e_k^q - D_k^{q-1} e_k.
struct CarlitzBasis {
  FqFieldPtr field;
  unsigned K;
  std::vector<XPoly> e;
  std::vector<FqPoly> D;

  // Largest n with all base-q digits indexable: n < q^{K+1}.
  unsigned long index_bound() const;
};

CarlitzBasis build_basis(const FqFieldPtr& f, unsigned K,
                         unsigned long budget = default_enumeration_budget());

// G_n(arg) = prod_t (e_t(arg)/D_t)^{n_t} over the base-q digits of n,
// as a reduced fraction. Requires n < q^{K+1}.
FqRatio carlitz_G(const CarlitzBasis& basis, unsigned long n,
                  const FqPoly& arg);

// G_n as a rational function of x: numerator prod_t e_t(x)^{n_t} and
// scalar denominator prod_t D_t^{n_t}.
std::pair<XPoly, FqPoly> carlitz_G_poly(const CarlitzBasis& basis,
                                        unsigned long n);

// D_k | e_k(g) exactly, for random g of degree <= max_deg.
CheckReport integrality_check(const CarlitzBasis& basis, unsigned k,
                              std::size_t samples, unsigned max_deg,
                              unsigned long seed);

// G_n(x+y) = sum_j C(n,j) G_j(x) G_{n-j}(y) mod p, as an exact bivariate
// identity after clearing the (common) denominator.
CheckReport carlitz_binomial_identity(const CarlitzBasis& basis,
                                      unsigned long n);

// Coefficients a_n (n < q^d) with sum_n a_n G_n(g) = f(g) for every g of
// degree < d; `values` lists f over enumerate_polys(field, d) in order.
// Solved exactly over F_q(t); coefficients must come out integral.
std::vector<FqPoly> expand_in_G(const CarlitzBasis& basis, unsigned d,
                                const std::vector<FqPoly>& values,
                                unsigned long budget = default_enumeration_budget());

// Sum_n coeffs[n] * G_n(g).
FqPoly eval_expansion(const CarlitzBasis& basis,
                      const std::vector<FqPoly>& coeffs, const FqPoly& g);

}  // namespace binomlab
