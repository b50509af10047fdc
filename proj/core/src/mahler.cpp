#include "binomlab/mahler.hpp"

#include <stdexcept>

namespace binomlab {

SampledFunction forward_difference(const SampledFunction& f,
                                   std::size_t order) {
  if (f.empty()) throw std::invalid_argument("forward_difference: empty sample");
  if (order >= f.size())
    throw std::invalid_argument("forward_difference: order exceeds horizon");
  SampledFunction cur = f;
  for (std::size_t k = 0; k < order; ++k) {
    SampledFunction next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      next[i] = cur[i + 1] - cur[i];
    cur = std::move(next);
  }
  return cur;
}

std::vector<ExactRational> newton_coefficients(const SampledFunction& f) {
  // One difference table pass; a_k is the leading entry at depth k.
  std::vector<ExactRational> coeffs;
  coeffs.reserve(f.size());
  SampledFunction cur = f;
  while (!cur.empty()) {
    coeffs.push_back(cur.front());
    SampledFunction next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      next[i] = cur[i + 1] - cur[i];
    cur = std::move(next);
  }
  return coeffs;
}

ExactRational newton_reconstruct(const std::vector<ExactRational>& coeffs,
                                 const ExactRational& x) {
  ExactRational sum = 0;
  ExactRational binom = 1;  // C(x,0)
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    sum += coeffs[k] * binom;
    ExactRational factor = x - ExactRational(static_cast<long>(k));
    factor /= static_cast<long>(k + 1);
    binom *= factor;
  }
  sum.canonicalize();
  return sum;
}

std::optional<long> rational_valuation(const ExactRational& r,
                                       unsigned long p) {
  if (r == 0) return std::nullopt;
  ExactInt den = r.get_den();
  long vden = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= static_cast<long>(p);
    ++vden;
  }
  ExactInt num = r.get_num();
  long vnum = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= static_cast<long>(p);
    ++vnum;
  }
  return vnum - vden;
}

std::vector<std::optional<long>> mahler_decay_profile(const SampledFunction& f,
                                                      unsigned p) {
  for (const auto& v : f)
    if (mpz_divisible_ui_p(v.get_den().get_mpz_t(), p))
      throw std::invalid_argument(
          "mahler_decay_profile: sample has non-p-integral denominator");
  std::vector<std::optional<long>> profile;
  for (const auto& a : newton_coefficients(f))
    profile.push_back(rational_valuation(a, p));
  return profile;
}

TruncSeries::TruncSeries(FqFieldPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncSeries: empty coefficient list");
}

TruncSeries TruncSeries::one(FqFieldPtr field, std::size_t trunc) {
  std::vector<FqElem> c(trunc + 1, FqElem::zero(field));
  c[0] = FqElem::one(field);
  return TruncSeries(std::move(field), std::move(c));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (trunc() != o.trunc())
    throw std::invalid_argument("TruncSeries: truncation mismatch");
  std::vector<FqElem> c(coeffs_.size(), FqElem::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return TruncSeries(field_, std::move(c));
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  if (!field_->same(*o.field_) || coeffs_.size() != o.coeffs_.size())
    return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

TruncSeries one_unit_power(const PAdicTrunc& y, std::size_t L,
                           const FqFieldPtr& field) {
  if (y.base().q != field->q())
    throw std::invalid_argument("one_unit_power: digit base != field q");
  const unsigned long q = field->q();
  const unsigned p = field->p();
  // Digit positions with q^i <= L contribute; (1+u^{q^i})^{y_i} only
  // touches degrees >= q^i.
  std::size_t needed = 0;
  for (unsigned long qi = 1; qi <= L; qi *= q) ++needed;
  if (y.precision() < needed)
    throw std::invalid_argument("one_unit_power: insufficient precision of y");

  TruncSeries series = TruncSeries::one(field, L);
  unsigned long qi = 1;
  for (std::size_t i = 0; i < needed; ++i, qi *= q) {
    unsigned long digit = y.digit(i);
    if (digit == 0) continue;
    // (1 + u^{q^i})^{digit} = sum_j C(digit,j) u^{j q^i} with digit < q.
    std::vector<FqElem> factor(L + 1, FqElem::zero(field));
    unsigned long c = 1;
    for (unsigned long j = 0; j <= digit && j * qi <= L; ++j) {
      if (j > 0) c = c * (digit - j + 1) / j;
      factor[j * qi] = FqElem::from_int(field, static_cast<long>(c % p));
    }
    series = series * TruncSeries(field, std::move(factor));
  }
  return series;
}

}  // namespace binomlab
