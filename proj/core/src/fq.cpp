#include "binomlab/fq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "binomlab/padic.hpp"

namespace binomlab {

namespace {

// Arithmetic on little-endian coefficient vectors over F_p.
using Vec = std::vector<unsigned>;

void trim_vec(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec vadd(const Vec& a, const Vec& b, unsigned p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s % p;
  }
  trim_vec(r);
  return r;
}

Vec vsub(const Vec& a, const Vec& b, unsigned p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned s = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0) % p;
    r[i] = s % p;
  }
  trim_vec(r);
  return r;
}

Vec vmul(const Vec& a, const Vec& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim_vec(r);
  return r;
}

unsigned inv_mod(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  unsigned r = 1;
  for (unsigned e = p - 2; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

// Division with remainder; divisor need not be monic.
std::pair<Vec, Vec> vdivrem(Vec a, const Vec& b, unsigned p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  Vec q;
  unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    unsigned factor = a.back() * lead_inv % p;
    if (q.size() < shift + 1) q.resize(shift + 1, 0);
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
    trim_vec(a);
    if (a.size() == shift + b.size()) break;  // cancellation failed
  }
  trim_vec(q);
  return {q, a};
}

Vec vmod(const Vec& a, const Vec& b, unsigned p) { return vdivrem(a, b, p).second; }

bool vec_irreducible(const Vec& f, unsigned p) {
  if (f.size() < 2) return false;  // constants are not irreducible
  unsigned deg = static_cast<unsigned>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long idx = 0; idx < count; ++idx) {
      Vec divisor(d + 1, 0);
      unsigned long rest = idx;
      for (unsigned i = 0; i < d; ++i, rest /= p)
        divisor[i] = static_cast<unsigned>(rest % p);
      divisor[d] = 1;
      if (vmod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FqField::FqField(unsigned p, unsigned m0, std::vector<unsigned> modulus)
    : p_(p), m0_(m0), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < m0_; ++i) q_ *= p_;
}

FqFieldPtr FqField::make(unsigned p, unsigned m0) {
  if (!is_prime(p)) throw std::invalid_argument("FqField: p not prime");
  if (m0 < 1) throw std::invalid_argument("FqField: m0 must be >= 1");
  // First irreducible monic polynomial of degree m0 in counting order.
  unsigned long count = 1;
  for (unsigned i = 0; i < m0; ++i) count *= p;
  for (unsigned long idx = 0; idx < count; ++idx) {
    Vec cand(m0 + 1, 0);
    unsigned long rest = idx;
    for (unsigned i = 0; i < m0; ++i, rest /= p)
      cand[i] = static_cast<unsigned>(rest % p);
    cand[m0] = 1;
    if (m0 == 1 || vec_irreducible(cand, p))
      return FqFieldPtr(new FqField(p, m0, std::move(cand)));
  }
  throw std::logic_error("FqField: no irreducible found");  // unreachable
}

FqFieldPtr FqField::make(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("FqField: p not prime");
  trim_vec(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("FqField: modulus must be monic of degree >= 1");
  for (unsigned c : modulus)
    if (c >= p) throw std::invalid_argument("FqField: modulus coeff out of range");
  unsigned m0 = static_cast<unsigned>(modulus.size()) - 1;
  if (m0 > 1 && !vec_irreducible(modulus, p))
    throw std::invalid_argument("FqField: modulus is reducible");
  return FqFieldPtr(new FqField(p, m0, std::move(modulus)));
}

FqElem::FqElem(FqFieldPtr field, std::vector<unsigned> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->m0())
    throw std::invalid_argument("FqElem: coefficient count != m0");
  for (unsigned c : coeffs_)
    if (c >= field_->p())
      throw std::invalid_argument("FqElem: coefficient out of range");
}

FqElem FqElem::zero(FqFieldPtr f) {
  std::vector<unsigned> c(f->m0(), 0);
  return FqElem(std::move(f), std::move(c));
}

FqElem FqElem::one(FqFieldPtr f) { return from_int(std::move(f), 1); }

FqElem FqElem::from_int(FqFieldPtr f, long v) {
  long p = static_cast<long>(f->p());
  std::vector<unsigned> c(f->m0(), 0);
  c[0] = static_cast<unsigned>(((v % p) + p) % p);
  return FqElem(std::move(f), std::move(c));
}

FqElem FqElem::from_index(FqFieldPtr f, unsigned long index) {
  if (index >= f->q()) throw std::out_of_range("FqElem::from_index");
  std::vector<unsigned> c(f->m0(), 0);
  for (unsigned i = 0; i < f->m0(); ++i, index /= f->p())
    c[i] = static_cast<unsigned>(index % f->p());
  return FqElem(std::move(f), std::move(c));
}

unsigned long FqElem::index() const {
  unsigned long idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    idx = idx * field_->p() + coeffs_[i];
  return idx;
}

bool FqElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](unsigned c) { return c == 0; });
}

FqElem FqElem::operator+(const FqElem& o) const {
  std::vector<unsigned> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (coeffs_[i] + o.coeffs_[i]) % field_->p();
  return FqElem(field_, std::move(c));
}

FqElem FqElem::operator-(const FqElem& o) const { return *this + (-o); }

FqElem FqElem::operator-() const {
  std::vector<unsigned> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (field_->p() - coeffs_[i]) % field_->p();
  return FqElem(field_, std::move(c));
}

FqElem FqElem::operator*(const FqElem& o) const {
  Vec prod = vmul(coeffs_, o.coeffs_, field_->p());
  Vec red = vmod(prod, field_->modulus(), field_->p());
  red.resize(field_->m0(), 0);
  return FqElem(field_, std::move(red));
}

FqElem FqElem::pow(unsigned long e) const {
  FqElem r = one(field_), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw std::domain_error("FqElem: inverse of zero");
  return pow(field_->q() - 2);
}

bool FqElem::operator==(const FqElem& o) const {
  return field_->same(*o.field_) && coeffs_ == o.coeffs_;
}

FqPoly::FqPoly(FqFieldPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FqPoly FqPoly::constant(FqFieldPtr f, const FqElem& c) {
  return FqPoly(std::move(f), {c});
}

FqPoly FqPoly::t(FqFieldPtr f) {
  return FqPoly(f, {FqElem::zero(f), FqElem::one(f)});
}

FqPoly FqPoly::monomial(FqFieldPtr f, const FqElem& c, std::size_t deg) {
  std::vector<FqElem> coeffs(deg + 1, FqElem::zero(f));
  coeffs[deg] = c;
  return FqPoly(std::move(f), std::move(coeffs));
}

bool FqPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == FqElem::one(field_);
}

FqElem FqPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FqElem::zero(field_);
}

FqElem FqPoly::leading() const {
  if (is_zero()) throw std::domain_error("FqPoly: leading of zero");
  return coeffs_.back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  std::vector<FqElem> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        FqElem::zero(field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return FqPoly(field_, std::move(c));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  std::vector<FqElem> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        FqElem::zero(field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return FqPoly(field_, std::move(c));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (is_zero() || o.is_zero()) return FqPoly(field_);
  std::vector<FqElem> c(coeffs_.size() + o.coeffs_.size() - 1,
                        FqElem::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return FqPoly(field_, std::move(c));
}

FqPoly FqPoly::operator*(const FqElem& s) const {
  std::vector<FqElem> c = coeffs_;
  for (auto& ci : c) ci = ci * s;
  return FqPoly(field_, std::move(c));
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& divisor) const {
  if (divisor.is_zero())
    throw std::domain_error("FqPoly: division by zero polynomial");
  FqPoly rem = *this;
  FqPoly quot(field_);
  FqElem lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    FqElem factor = rem.leading() * lead_inv;
    FqPoly term = monomial(field_, factor, shift);
    quot = quot + term;
    rem = rem - term * divisor;
  }
  return {quot, rem};
}

FqPoly FqPoly::pow(unsigned long e) const {
  FqPoly r = constant(field_, FqElem::one(field_));
  FqPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FqPoly FqPoly::make_monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

bool FqPoly::operator==(const FqPoly& o) const {
  if (!field_->same(*o.field_)) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

namespace {

std::string coeff_string(const FqElem& c) {
  if (c.field()->m0() == 1) return std::to_string(c.coeffs()[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.coeffs()[i]);
  }
  return s + "]";
}

}  // namespace

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = coeff_string(coeffs_[i]);
    bool unit = (field_->m0() == 1 && cs == "1");
    if (i == 0) {
      s += cs;
    } else {
      if (!unit) s += cs + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

FqPoly FqPoly::parse(FqFieldPtr f, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("FqPoly::parse: empty input");
  if (s == "0") return FqPoly(f);
  FqPoly result(f);
  std::size_t pos = 0;
  while (pos < s.size()) {
    // Split on '+' at depth zero (brackets contain commas, not '+').
    std::size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term.empty()) throw std::invalid_argument("FqPoly::parse: empty term");

    FqElem c = FqElem::one(f);
    std::size_t deg = 0;
    std::string body = term;
    // Optional "coeff*" prefix or pure coefficient.
    std::size_t tpos = body.find('t');
    if (tpos == std::string::npos) {
      // constant term
      body = term;
      deg = 0;
      tpos = std::string::npos;
    }
    if (tpos != std::string::npos) {
      std::string cpart = body.substr(0, tpos);
      if (!cpart.empty()) {
        if (cpart.back() != '*')
          throw std::invalid_argument("FqPoly::parse: expected '*' before t");
        cpart.pop_back();
      }
      if (!cpart.empty()) {
        // parse coefficient below
        body = cpart;
      } else {
        body.clear();
      }
      std::string epart = term.substr(tpos + 1);
      if (epart.empty()) {
        deg = 1;
      } else {
        if (epart[0] != '^')
          throw std::invalid_argument("FqPoly::parse: expected '^'");
        deg = std::stoul(epart.substr(1));
      }
    }
    if (!body.empty() || tpos == std::string::npos) {
      std::string cs = (tpos == std::string::npos) ? term : body;
      if (cs.empty()) cs = "1";
      if (cs.front() == '[') {
        if (cs.back() != ']')
          throw std::invalid_argument("FqPoly::parse: unbalanced bracket");
        std::vector<unsigned> coeffs;
        std::stringstream ss(cs.substr(1, cs.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(std::stoul(item));
        if (coeffs.size() != f->m0())
          throw std::invalid_argument("FqPoly::parse: coeff vector length != m0");
        c = FqElem(f, coeffs);
      } else {
        c = FqElem::from_int(f, std::stol(cs));
      }
    }
    result = result + monomial(f, c, deg);
  }
  return result;
}

FqPoly fq_gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = y;
    y = r;
  }
  return x.make_monic();
}

FqPoly poly_at(const FqFieldPtr& f, unsigned long index) {
  std::vector<FqElem> coeffs;
  for (; index != 0; index /= f->q())
    coeffs.push_back(FqElem::from_index(f, index % f->q()));
  return FqPoly(f, std::move(coeffs));
}

unsigned long index_of_poly(const FqPoly& g) {
  unsigned long idx = 0;
  const auto& f = g.field();
  for (std::size_t i = g.coeffs().size(); i-- > 0;)
    idx = idx * f->q() + g.coeff(i).index();
  return idx;
}

namespace {

unsigned long checked_pow(unsigned long q, unsigned k, unsigned long budget,
                          const char* who) {
  unsigned long n = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n > budget / q)
      throw BudgetExceeded(std::string(who) + ": q^k exceeds enumeration budget");
    n *= q;
  }
  if (n > budget)
    throw BudgetExceeded(std::string(who) + ": q^k exceeds enumeration budget");
  return n;
}

}  // namespace

std::vector<FqPoly> enumerate_polys(const FqFieldPtr& f, unsigned k,
                                    unsigned long budget) {
  unsigned long n = checked_pow(f->q(), k, budget, "enumerate_polys");
  std::vector<FqPoly> out;
  out.reserve(n);
  for (unsigned long idx = 0; idx < n; ++idx) out.push_back(poly_at(f, idx));
  return out;
}

std::vector<FqPoly> enumerate_monic(const FqFieldPtr& f, unsigned k,
                                    unsigned long budget) {
  unsigned long n = checked_pow(f->q(), k, budget, "enumerate_monic");
  std::vector<FqPoly> out;
  out.reserve(n);
  FqPoly lead = FqPoly::monomial(f, FqElem::one(f), k);
  for (unsigned long idx = 0; idx < n; ++idx)
    out.push_back(lead + poly_at(f, idx));
  return out;
}

FqPoly random_poly(const FqFieldPtr& f, unsigned max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned long> pick(0, f->q() - 1);
  std::vector<FqElem> coeffs;
  for (unsigned i = 0; i <= max_deg; ++i)
    coeffs.push_back(FqElem::from_index(f, pick(rng)));
  return FqPoly(f, std::move(coeffs));
}

FqBiPoly FqBiPoly::x(FqFieldPtr f) {
  FqBiPoly b(f);
  b.add_term(1, 0, FqElem::one(f));
  return b;
}

FqBiPoly FqBiPoly::y(FqFieldPtr f) {
  FqBiPoly b(f);
  b.add_term(0, 1, FqElem::one(f));
  return b;
}

FqBiPoly FqBiPoly::constant(FqFieldPtr f, const FqElem& c) {
  FqBiPoly b(f);
  b.add_term(0, 0, c);
  return b;
}

void FqBiPoly::add_term(unsigned long i, unsigned long j, const FqElem& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FqElem FqBiPoly::coeff(unsigned long i, unsigned long j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? FqElem::zero(field_) : it->second;
}

FqBiPoly FqBiPoly::operator+(const FqBiPoly& o) const {
  FqBiPoly r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
  return r;
}

FqBiPoly FqBiPoly::operator*(const FqBiPoly& o) const {
  FqBiPoly r(field_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

FqBiPoly FqBiPoly::pow(unsigned long e) const {
  FqBiPoly r = constant(field_, FqElem::one(field_));
  FqBiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool FqBiPoly::operator==(const FqBiPoly& o) const {
  if (!field_->same(*o.field_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [key, c] : terms_) {
    if (it->first != key || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string FqBiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    std::string cs = coeff_string(c);
    std::vector<std::string> parts;
    bool unit = (field_->m0() == 1 && cs == "1");
    if (!unit || (key.first == 0 && key.second == 0)) parts.push_back(cs);
    if (key.first)
      parts.push_back(key.first > 1 ? "x^" + std::to_string(key.first) : "x");
    if (key.second)
      parts.push_back(key.second > 1 ? "y^" + std::to_string(key.second) : "y");
    if (!s.empty()) s += "+";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += "*";
      s += parts[i];
    }
  }
  return s;
}

CheckReport frobenius_check(const FqFieldPtr& f, std::size_t samples,
                            unsigned long seed) {
  CheckReport rep{.name = "frobenius"};
  const unsigned p = f->p();
  // Symbolic: (x+y)^p = x^p + y^p as bivariate polynomials.
  {
    FqBiPoly lhs = (FqBiPoly::x(f) + FqBiPoly::y(f)).pow(p);
    FqBiPoly rhs(f);
    rhs.add_term(p, 0, FqElem::one(f));
    rhs.add_term(0, p, FqElem::one(f));
    ++rep.checks;
    if (!(lhs == rhs))
      rep.fail("(x+y)^p != x^p+y^p symbolically: " + lhs.to_string());
  }
  // Random polynomial pairs.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> degree(0, 6);
  for (std::size_t s = 0; s < samples; ++s) {
    FqPoly a = random_poly(f, degree(rng), rng);
    FqPoly b = random_poly(f, degree(rng), rng);
    ++rep.checks;
    if ((a + b).pow(p) != a.pow(p) + b.pow(p))
      rep.fail("(a+b)^p != a^p+b^p at a=" + a.to_string() +
               " b=" + b.to_string());
  }
  // Fermat echo: a^q = a for every field element.
  for (unsigned long i = 0; i < f->q(); ++i) {
    FqElem a = FqElem::from_index(f, i);
    ++rep.checks;
    if (!(a.pow(f->q()) == a))
      rep.fail("a^q != a at element index " + std::to_string(i));
  }
  return rep;
}

FqBiPoly digit_factorization(unsigned long n, const FqFieldPtr& f,
                             unsigned long budget) {
  if (n > budget)
    throw BudgetExceeded("digit_factorization: degree exceeds budget");
  FqBiPoly direct = (FqBiPoly::x(f) + FqBiPoly::y(f)).pow(n);
  FqBiPoly product = FqBiPoly::constant(f, FqElem::one(f));
  unsigned long qk = 1;
  for (unsigned long rest = n; rest != 0; rest /= f->q(), qk *= f->q()) {
    unsigned long digit = rest % f->q();
    FqBiPoly factor(f);
    factor.add_term(qk, 0, FqElem::one(f));
    factor.add_term(0, qk, FqElem::one(f));
    product = product * factor.pow(digit);
  }
  if (!(direct == product))
    throw std::logic_error("digit_factorization: factored form disagrees");
  return direct;
}

}  // namespace binomlab
