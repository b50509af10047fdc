#include "binomlab/carlitz.hpp"

#include <map>
#include <stdexcept>

#include "binomlab/padic.hpp"

namespace binomlab {

XPoly::XPoly(FqFieldPtr field, std::vector<FqPoly> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly XPoly::x(const FqFieldPtr& f) {
  return XPoly(f, {FqPoly(f), FqPoly::constant(f, FqElem::one(f))});
}

XPoly XPoly::constant(const FqPoly& c) { return XPoly(c.field(), {c}); }

FqPoly XPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FqPoly(field_);
}

XPoly XPoly::operator+(const XPoly& o) const {
  std::vector<FqPoly> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        FqPoly(field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return XPoly(field_, std::move(c));
}

XPoly XPoly::operator-(const XPoly& o) const {
  std::vector<FqPoly> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        FqPoly(field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return XPoly(field_, std::move(c));
}

XPoly XPoly::operator*(const XPoly& o) const {
  if (is_zero() || o.is_zero()) return XPoly(field_);
  std::vector<FqPoly> c(coeffs_.size() + o.coeffs_.size() - 1, FqPoly(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return XPoly(field_, std::move(c));
}

XPoly XPoly::operator*(const FqPoly& s) const {
  std::vector<FqPoly> c = coeffs_;
  for (auto& ci : c) ci = ci * s;
  return XPoly(field_, std::move(c));
}

XPoly XPoly::pow(unsigned long e) const {
  XPoly r = constant(FqPoly::constant(field_, FqElem::one(field_)));
  XPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FqPoly XPoly::eval(const FqPoly& arg) const {
  FqPoly r(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * arg + coeffs_[i];
  return r;
}

bool XPoly::operator==(const XPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

FqRatio FqRatio::of(const FqPoly& n, const FqPoly& d) {
  if (d.is_zero()) throw std::domain_error("FqRatio: zero denominator");
  if (n.is_zero())
    return {FqPoly(n.field()),
            FqPoly::constant(n.field(), FqElem::one(n.field()))};
  FqPoly g = fq_gcd(n, d);
  FqPoly num = n / g, den = d / g;
  FqElem lead_inv = den.leading().inverse();
  return {num * lead_inv, den * lead_inv};
}

FqRatio FqRatio::integral(const FqPoly& n) {
  return {n, FqPoly::constant(n.field(), FqElem::one(n.field()))};
}

FqRatio FqRatio::operator+(const FqRatio& o) const {
  return of(num * o.den + o.num * den, den * o.den);
}

FqRatio FqRatio::operator-(const FqRatio& o) const {
  return of(num * o.den - o.num * den, den * o.den);
}

FqRatio FqRatio::operator*(const FqRatio& o) const {
  return of(num * o.num, den * o.den);
}

FqRatio FqRatio::operator/(const FqRatio& o) const {
  if (o.is_zero()) throw std::domain_error("FqRatio: division by zero");
  return of(num * o.den, den * o.num);
}

unsigned long CarlitzBasis::index_bound() const {
  unsigned long b = 1;
  for (unsigned i = 0; i <= K; ++i) b *= field->q();
  return b;
}

CarlitzBasis build_basis(const FqFieldPtr& f, unsigned K,
                         unsigned long budget) {
  CarlitzBasis basis{f, K, {}, {}};
  const unsigned long q = f->q();
  for (unsigned k = 0; k <= K; ++k) {
    // Defining product over all alpha of degree < k (the zero polynomial
    // counts, so e_0(x) = x).
    XPoly ek = XPoly::constant(FqPoly::constant(f, FqElem::one(f)));
    for (const FqPoly& alpha : enumerate_polys(f, k, budget))
      ek = ek * (XPoly::x(f) - XPoly::constant(alpha));
    // Only monomials x^{q^i} may survive (F_q-linearity).
    for (std::size_t i = 0; i <= static_cast<std::size_t>(ek.degree()); ++i) {
      if (ek.coeff(i).is_zero()) continue;
      unsigned long qp = 1;
      while (qp < i) qp *= q;
      if (qp != i)
        throw std::logic_error("build_basis: e_k has a non-q-power monomial");
    }
    FqPoly tk = FqPoly::monomial(f, FqElem::one(f), k);
    FqPoly Dk = ek.eval(tk);
    // Cross-check against the recursion for k >= 1.
    if (k >= 1) {
      const XPoly& prev = basis.e[k - 1];
      XPoly via_recursion =
          prev.pow(q) - prev * basis.D[k - 1].pow(q - 1);
      if (!(via_recursion == ek))
        throw std::logic_error("build_basis: recursion and product disagree");
    }
    basis.e.push_back(std::move(ek));
    basis.D.push_back(std::move(Dk));
  }
  return basis;
}

FqRatio carlitz_G(const CarlitzBasis& basis, unsigned long n,
                  const FqPoly& arg) {
  const unsigned long q = basis.field->q();
  FqRatio g = FqRatio::integral(
      FqPoly::constant(basis.field, FqElem::one(basis.field)));
  unsigned t = 0;
  for (unsigned long rest = n; rest != 0; rest /= q, ++t) {
    if (t > basis.K)
      throw std::out_of_range("carlitz_G: n >= q^{K+1} for this basis");
    unsigned long digit = rest % q;
    if (digit == 0) continue;
    FqRatio factor = FqRatio::of(basis.e[t].eval(arg), basis.D[t]);
    for (unsigned long i = 0; i < digit; ++i) g = g * factor;
  }
  return g;
}

std::pair<XPoly, FqPoly> carlitz_G_poly(const CarlitzBasis& basis,
                                        unsigned long n) {
  const unsigned long q = basis.field->q();
  XPoly num = XPoly::constant(
      FqPoly::constant(basis.field, FqElem::one(basis.field)));
  FqPoly den = FqPoly::constant(basis.field, FqElem::one(basis.field));
  unsigned t = 0;
  for (unsigned long rest = n; rest != 0; rest /= q, ++t) {
    if (t > basis.K)
      throw std::out_of_range("carlitz_G_poly: n >= q^{K+1} for this basis");
    unsigned long digit = rest % q;
    for (unsigned long i = 0; i < digit; ++i) {
      num = num * basis.e[t];
      den = den * basis.D[t];
    }
  }
  return {num, den};
}

CheckReport integrality_check(const CarlitzBasis& basis, unsigned k,
                              std::size_t samples, unsigned max_deg,
                              unsigned long seed) {
  if (k > basis.K) throw std::out_of_range("integrality_check: k > K");
  CheckReport rep{.name = "integrality"};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    FqPoly g = random_poly(basis.field, max_deg, rng);
    auto [quot, rem] = basis.e[k].eval(g).divrem(basis.D[k]);
    ++rep.checks;
    if (!rem.is_zero())
      rep.fail("D_" + std::to_string(k) + " does not divide e_" +
               std::to_string(k) + "(g) at g=" + g.to_string());
  }
  return rep;
}

namespace {

// Sparse bivariate polynomial in (x,y) with F_q[t] coefficients.
using XYPoly = std::map<std::pair<unsigned long, unsigned long>, FqPoly>;

void xy_add(XYPoly& acc, unsigned long i, unsigned long j, const FqPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

CheckReport carlitz_binomial_identity(const CarlitzBasis& basis,
                                      unsigned long n) {
  CheckReport rep{.name = "carlitz-binomial"};
  const FqFieldPtr& f = basis.field;
  const unsigned p = f->p();

  auto [num_n, den_n] = carlitz_G_poly(basis, n);

  // Left side: N_n(x+y), expanded with integer binomials reduced mod p.
  XYPoly lhs;
  for (std::size_t m = 0; m <= static_cast<std::size_t>(num_n.degree()); ++m) {
    FqPoly cm = num_n.coeff(m);
    if (cm.is_zero()) continue;
    for (unsigned long i = 0; i <= m; ++i) {
      unsigned long c = lucas_binomial_mod_p(m, i, p);
      if (c == 0) continue;
      xy_add(lhs, i, m - i, cm * FqElem::from_int(f, static_cast<long>(c)));
    }
  }

  // Right side: sum over j with C(n,j) != 0 mod p. For those j the digits
  // of j are dominated by the digits of n, so the term's denominator
  // D^{(j)} D^{(n-j)} equals den_n and the sides share one denominator.
  XYPoly rhs;
  for (unsigned long j = 0; j <= n; ++j) {
    unsigned long c = lucas_binomial_mod_p(j + (n - j), j, p);
    if (c == 0) continue;
    auto [num_j, den_j] = carlitz_G_poly(basis, j);
    auto [num_nj, den_nj] = carlitz_G_poly(basis, n - j);
    if (den_j * den_nj != den_n)
      throw std::logic_error("carlitz_binomial_identity: denominator mismatch");
    FqElem scalar = FqElem::from_int(f, static_cast<long>(c));
    for (std::size_t a = 0; a <= static_cast<std::size_t>(num_j.degree()); ++a) {
      FqPoly ca = num_j.coeff(a);
      if (ca.is_zero()) continue;
      for (std::size_t b = 0; b <= static_cast<std::size_t>(num_nj.degree());
           ++b) {
        FqPoly cb = num_nj.coeff(b);
        if (cb.is_zero()) continue;
        xy_add(rhs, a, b, ca * cb * scalar);
      }
    }
  }

  ++rep.checks;
  if (lhs != rhs)
    rep.fail("G_n(x+y) != sum C(n,j) G_j(x) G_{n-j}(y) at n=" +
             std::to_string(n));
  return rep;
}

std::vector<FqPoly> expand_in_G(const CarlitzBasis& basis, unsigned d,
                                const std::vector<FqPoly>& values,
                                unsigned long budget) {
  const FqFieldPtr& f = basis.field;
  std::vector<FqPoly> points = enumerate_polys(f, d, budget);
  const std::size_t n = points.size();
  if (values.size() != n)
    throw std::invalid_argument("expand_in_G: need q^d sample values");

  // Exact dense solve of M a = v over F_q(t) with M[m][k] = G_k(g_m).
  // The graded enumeration makes M block-triangular, not strictly
  // triangular, so we run full elimination with nonzero pivoting.
  std::vector<std::vector<FqRatio>> M(n, std::vector<FqRatio>(n + 1));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k)
      M[m][k] = carlitz_G(basis, k, points[m]);
    M[m][n] = FqRatio::integral(values[m]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && M[pivot][col].is_zero()) ++pivot;
    if (pivot == n)
      throw std::runtime_error("expand_in_G: singular evaluation matrix");
    std::swap(M[pivot], M[col]);
    FqRatio inv = FqRatio::integral(FqPoly::constant(f, FqElem::one(f))) /
                  M[col][col];
    for (std::size_t k = col; k <= n; ++k) M[col][k] = M[col][k] * inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      FqRatio factor = M[row][col];
      for (std::size_t k = col; k <= n; ++k)
        M[row][k] = M[row][k] - factor * M[col][k];
    }
  }
  std::vector<FqPoly> coeffs;
  coeffs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!M[k][n].is_integral())
      throw std::runtime_error("expand_in_G: non-integral coefficient");
    coeffs.push_back(M[k][n].num);
  }
  // Round trip on every sample point.
  for (std::size_t m = 0; m < n; ++m)
    if (eval_expansion(basis, coeffs, points[m]) != values[m])
      throw std::logic_error("expand_in_G: reconstruction mismatch");
  return coeffs;
}

FqPoly eval_expansion(const CarlitzBasis& basis,
                      const std::vector<FqPoly>& coeffs, const FqPoly& g) {
  FqPoly sum(basis.field);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    FqRatio gk = carlitz_G(basis, k, g);
    if (!gk.is_integral())
      throw std::logic_error("eval_expansion: G_k(g) not integral");
    sum = sum + coeffs[k] * gk.num;
  }
  return sum;
}

}  // namespace binomlab
