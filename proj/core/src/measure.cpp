#include "binomlab/measure.hpp"

#include <stdexcept>

#include "binomlab/padic.hpp"

namespace binomlab {

namespace {

// Irreducibility over F_q by trial division against enumerated monic
// polynomials of degree <= deg(f)/2.
bool fq_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const FqPoly& g : enumerate_monic(f.field(), static_cast<unsigned>(d)))
      if ((f % g).is_zero()) return false;
  return true;
}

void require_same_ring(const QuotientRingPtr& a, const QuotientRingPtr& b,
                       const char* who) {
  if (!a->same(*b)) throw std::invalid_argument(std::string(who) + ": ring mismatch");
}

}  // namespace

QuotientRing::QuotientRing(FqFieldPtr field, FqPoly f, unsigned level,
                           FqPoly fN)
    : field_(std::move(field)),
      f_(std::move(f)),
      level_(level),
      fN_(std::move(fN)) {}

QuotientRingPtr QuotientRing::make(FqFieldPtr field, FqPoly f,
                                   unsigned level) {
  if (level < 1) throw std::invalid_argument("QuotientRing: level must be >= 1");
  if (f.is_zero() || !(f.leading() == FqElem::one(field)))
    throw std::invalid_argument("QuotientRing: f must be monic");
  if (!fq_irreducible(f))
    throw std::invalid_argument("QuotientRing: f must be irreducible");
  FqPoly fN = f.pow(level);
  return QuotientRingPtr(
      new QuotientRing(std::move(field), std::move(f), level, std::move(fN)));
}

DividedOperator::DividedOperator(QuotientRingPtr ring,
                                 std::vector<FqPoly> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("DividedOperator: empty coefficient list");
  for (auto& c : coeffs_) c = ring_->reduce(c);
}

DividedOperator DividedOperator::zero(QuotientRingPtr ring, std::size_t trunc) {
  std::vector<FqPoly> c(trunc + 1, FqPoly(ring->field()));
  return DividedOperator(std::move(ring), std::move(c));
}

DividedOperator DividedOperator::identity(QuotientRingPtr ring,
                                          std::size_t trunc) {
  std::vector<FqPoly> c(trunc + 1, FqPoly(ring->field()));
  c[0] = FqPoly::constant(ring->field(), FqElem::one(ring->field()));
  return DividedOperator(std::move(ring), std::move(c));
}

bool DividedOperator::operator==(const DividedOperator& o) const {
  if (!ring_->same(*o.ring_) || coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

FiniteMeasure::FiniteMeasure(QuotientRingPtr ring, std::vector<FqPoly> moments)
    : ring_(std::move(ring)), moments_(std::move(moments)) {
  if (moments_.empty())
    throw std::invalid_argument("FiniteMeasure: empty moment list");
  for (auto& m : moments_) m = ring_->reduce(m);
}

bool FiniteMeasure::operator==(const FiniteMeasure& o) const {
  if (!ring_->same(*o.ring_) || moments_.size() != o.moments_.size())
    return false;
  for (std::size_t i = 0; i < moments_.size(); ++i)
    if (moments_[i] != o.moments_[i]) return false;
  return true;
}

DividedOperator op_mul(const DividedOperator& a, const DividedOperator& b) {
  require_same_ring(a.ring(), b.ring(), "op_mul");
  if (a.trunc() != b.trunc())
    throw std::invalid_argument("op_mul: truncation mismatch");
  const unsigned p = a.ring()->field()->p();
  std::vector<FqPoly> out(a.trunc() + 1, FqPoly(a.ring()->field()));
  for (std::size_t k = 0; k <= a.trunc(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      // C(k,i) mod p by Lucas; this is the hot kernel, big-integer
      // binomials stay out of it.
      unsigned long c = lucas_binomial_mod_p(k, i, p);
      if (c == 0 || a.coeff(i).is_zero() || b.coeff(k - i).is_zero()) continue;
      FqPoly term = a.coeff(i) * b.coeff(k - i) *
                    FqElem::from_int(a.ring()->field(), static_cast<long>(c));
      out[k] = out[k] + term;
    }
    out[k] = a.ring()->reduce(out[k]);
  }
  return DividedOperator(a.ring(), std::move(out));
}

FiniteMeasure delta_measure(const FqPoly& a, const CarlitzBasis& basis,
                            std::size_t trunc, const QuotientRingPtr& ring) {
  if (trunc >= basis.index_bound())
    throw std::out_of_range("delta_measure: basis does not cover truncation");
  std::vector<FqPoly> moments;
  moments.reserve(trunc + 1);
  for (std::size_t j = 0; j <= trunc; ++j) {
    FqRatio g = carlitz_G(basis, j, a);
    if (!g.is_integral())
      throw std::logic_error("delta_measure: G_j(a) not integral");
    moments.push_back(ring->reduce(g.num));
  }
  return FiniteMeasure(ring, std::move(moments));
}

DividedOperator measure_to_operator(const FiniteMeasure& mu) {
  return DividedOperator(mu.ring(), mu.moments());
}

FiniteMeasure operator_to_measure(const DividedOperator& op) {
  return FiniteMeasure(op.ring(), op.coeffs());
}

FiniteMeasure convolve(const FiniteMeasure& mu, const FiniteMeasure& nu) {
  return operator_to_measure(
      op_mul(measure_to_operator(mu), measure_to_operator(nu)));
}

CarlitzFunction act_on_function(const FiniteMeasure& mu,
                                const CarlitzFunction& f) {
  require_same_ring(mu.ring(), f.ring, "act_on_function");
  if (mu.trunc() != f.trunc())
    throw std::invalid_argument("act_on_function: truncation mismatch");
  const unsigned p = mu.ring()->field()->p();
  const std::size_t J = f.trunc();
  std::vector<FqPoly> out(J + 1, FqPoly(mu.ring()->field()));
  for (std::size_t n = 0; n <= J; ++n) {
    for (std::size_t j = 0; n + j <= J; ++j) {
      unsigned long c = lucas_binomial_mod_p(n + j, j, p);
      if (c == 0) continue;
      FqPoly term = mu.moment(j) * f.coeffs[n + j] *
                    FqElem::from_int(mu.ring()->field(), static_cast<long>(c));
      out[n] = out[n] + term;
    }
    out[n] = mu.ring()->reduce(out[n]);
  }
  return CarlitzFunction{mu.ring(), std::move(out)};
}

DividedOperator sigma_automorphism(const DigitPerm& sigma,
                                   const DividedOperator& a) {
  if (sigma.base().q != a.ring()->field()->q())
    throw std::invalid_argument("sigma_automorphism: digit base != field q");
  const std::size_t J = a.trunc();
  std::vector<FqPoly> out(J + 1, FqPoly(a.ring()->field()));
  for (std::size_t i = 0; i <= J; ++i) {
    ExactInt img = rho_star_int(sigma, ExactInt(static_cast<long>(i)));
    if (img > static_cast<long>(J))
      throw std::invalid_argument(
          "sigma_automorphism: index window not closed under sigma");
    out[img.get_ui()] = a.coeff(i);
  }
  return DividedOperator(a.ring(), std::move(out));
}

}  // namespace binomlab
