#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "binomlab/carlitz.hpp"
#include "binomlab/digit_perm.hpp"
#include "binomlab/fq.hpp"

namespace binomlab {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

// R = F_q[t]/(f^level) for a monic irreducible f: the finite-level face of
// the completion of F_q[t] at (f). Elements are reduced representatives.
class QuotientRing {
 public:
  static QuotientRingPtr make(FqFieldPtr field, FqPoly f, unsigned level);

  const FqFieldPtr& field() const { return field_; }
  const FqPoly& f() const { return f_; }
  unsigned level() const { return level_; }
  const FqPoly& modulus() const { return fN_; }  // f^level

  FqPoly reduce(const FqPoly& a) const { return a % fN_; }
  bool same(const QuotientRing& o) const {
    return field_->same(*o.field_) && f_ == o.f_ && level_ == o.level_;
  }

 private:
  QuotientRing(FqFieldPtr field, FqPoly f, unsigned level, FqPoly fN);
  FqFieldPtr field_;
  FqPoly f_;
  unsigned level_;
  FqPoly fN_;
};

// Truncated element sum_{j<=J} c_j D_j of R{{D}}, where the divided
// derivatives multiply by D_i D_j = C(i+j,i) D_{i+j}.
class DividedOperator {
 public:
  DividedOperator(QuotientRingPtr ring, std::vector<FqPoly> coeffs);
  static DividedOperator zero(QuotientRingPtr ring, std::size_t trunc);
  static DividedOperator identity(QuotientRingPtr ring, std::size_t trunc);

  const QuotientRingPtr& ring() const { return ring_; }
  std::size_t trunc() const { return coeffs_.size() - 1; }
  const FqPoly& coeff(std::size_t j) const { return coeffs_.at(j); }
  const std::vector<FqPoly>& coeffs() const { return coeffs_; }

  bool operator==(const DividedOperator& o) const;

 private:
  QuotientRingPtr ring_;
  std::vector<FqPoly> coeffs_;  // reduced mod f^level
};

// A measure represented by its Carlitz moments m_j = integral of G_j.
class FiniteMeasure {
 public:
  FiniteMeasure(QuotientRingPtr ring, std::vector<FqPoly> moments);

  const QuotientRingPtr& ring() const { return ring_; }
  std::size_t trunc() const { return moments_.size() - 1; }
  const FqPoly& moment(std::size_t j) const { return moments_.at(j); }
  const std::vector<FqPoly>& moments() const { return moments_; }

  bool operator==(const FiniteMeasure& o) const;

 private:
  QuotientRingPtr ring_;
  std::vector<FqPoly> moments_;
};

// A function sum_n a_n G_n, truncated.
struct CarlitzFunction {
  QuotientRingPtr ring;
  std::vector<FqPoly> coeffs;

  std::size_t trunc() const { return coeffs.size() - 1; }
};

// (AB)_k = sum_{i+j=k} C(k,i) a_i b_j mod p, truncated.
DividedOperator op_mul(const DividedOperator& a, const DividedOperator& b);

// Point mass at a: moments m_j = G_j(a) reduced into the ring.
FiniteMeasure delta_measure(const FqPoly& a, const CarlitzBasis& basis,
                            std::size_t trunc, const QuotientRingPtr& ring);

// The moment sequence is the operator's coefficient sequence.
DividedOperator measure_to_operator(const FiniteMeasure& mu);
FiniteMeasure operator_to_measure(const DividedOperator& op);

// Convolution, transported through the operator algebra.
FiniteMeasure convolve(const FiniteMeasure& mu, const FiniteMeasure& nu);

// (mu f)(x) = integral of f(x+y) dmu(y): coefficientwise
// b_n = sum_j C(n+j,j) m_j a_{n+j}.
CarlitzFunction act_on_function(const FiniteMeasure& mu,
                                const CarlitzFunction& f);

// D_i -> D_{sigma_* i}; the induced index map must keep [0, trunc]
// within itself.
DividedOperator sigma_automorphism(const DigitPerm& sigma,
                                   const DividedOperator& a);

}  // namespace binomlab
