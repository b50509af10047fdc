#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "binomlab/exact.hpp"
#include "binomlab/fq.hpp"
#include "binomlab/padic.hpp"

namespace binomlab {

// A function known by its values f(0), f(1), ..., f(M).
using SampledFunction = std::vector<ExactRational>;

// k-fold forward difference, sampled at 0..M-k.
SampledFunction forward_difference(const SampledFunction& f, std::size_t order);

// Newton coefficients a_k = (Delta^k f)(0), k = 0..M.
std::vector<ExactRational> newton_coefficients(const SampledFunction& f);

// Sum_k a_k C(x,k); exact equality with f at all rational x when f is a
// polynomial of degree <= M.
ExactRational newton_reconstruct(const std::vector<ExactRational>& coeffs,
                                 const ExactRational& x);

// v_p of each Newton coefficient; nullopt is the +infinity sentinel for
// vanishing coefficients. Inputs must have p-integral denominators.
std::vector<std::optional<long>> mahler_decay_profile(const SampledFunction& f,
                                                      unsigned p);

// v_p of a rational with p-integral denominator.
std::optional<long> rational_valuation(const ExactRational& r, unsigned long p);

// Truncated power series over F_q in u, degree <= L.
class TruncSeries {
 public:
  TruncSeries(FqFieldPtr field, std::vector<FqElem> coeffs);
  static TruncSeries one(FqFieldPtr field, std::size_t trunc);

  const FqFieldPtr& field() const { return field_; }
  std::size_t trunc() const { return coeffs_.size() - 1; }
  const FqElem& coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }

  TruncSeries operator*(const TruncSeries& o) const;
  bool operator==(const TruncSeries& o) const;

 private:
  FqFieldPtr field_;
  std::vector<FqElem> coeffs_;
};

// (1+u)^y = prod_i (1+u^{q^i})^{y_i}, truncated at degree L. Needs every
// digit position with q^i <= L, so the precision of y must reach it.
TruncSeries one_unit_power(const PAdicTrunc& y, std::size_t L,
                           const FqFieldPtr& field);

}  // namespace binomlab
