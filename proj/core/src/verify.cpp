#include "binomlab/verify.hpp"

#include <random>
#include <sstream>

#include "binomlab/carlitz.hpp"
#include "binomlab/digit_perm.hpp"
#include "binomlab/exact.hpp"
#include "binomlab/fq.hpp"
#include "binomlab/mahler.hpp"
#include "binomlab/measure.hpp"
#include "binomlab/padic.hpp"

namespace binomlab {

VerifyConfig VerifyConfig::scaled() const {
  if (!quick) return *this;
  VerifyConfig c = *this;
  c.lucas_n_max = 200;
  c.random_samples = 100;
  c.delta_pairs = 20;
  c.perm_count = 5;
  c.digit_roundtrip_max = 20000;
  c.subadditivity_pairs = 500;
  return c;
}

namespace {

ExactRational random_rational(std::mt19937_64& rng, long span = 50) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  ExactRational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::string rat(const ExactRational& r) { return to_string(r); }

}  // namespace

CheckReport verify_pascal_and_symmetry(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "exact/pascal-symmetry-integrality"};
  const unsigned long N = cfg.quick ? 120 : 300;
  std::vector<ExactInt> row{1};  // Pascal row, built by additions only
  for (unsigned long n = 0; n <= N; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      ExactInt b = binomial(ExactInt(static_cast<long>(n)),
                            ExactInt(static_cast<long>(k)));
      ++rep.checks;
      if (b != row[k])
        rep.fail("pascal: C(" + std::to_string(n) + "," + std::to_string(k) +
                 ") != additive oracle");
      if (b != binomial(ExactInt(static_cast<long>(n)),
                        ExactInt(static_cast<long>(n - k))))
        rep.fail("symmetry violated at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
      if (k <= 40) {  // binomial_poly cost grows with k
        ExactRational bp = binomial_poly(ExactRational(static_cast<long>(n)), k);
        if (bp.get_den() != 1 || bp.get_num() != b)
          rep.fail("binomial_poly not integral/equal at n=" +
                   std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    // Next row.
    row.push_back(1);
    for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
  }
  return rep;
}

CheckReport verify_binomial_theorem(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "exact/binomial-theorem"};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<unsigned long> deg(0, 30);
  for (std::size_t s = 0; s < 100; ++s) {
    ExactRational x = random_rational(rng), y = random_rational(rng);
    unsigned long n = deg(rng);
    ExactRational sum = binomial_expand(x, y, n);
    ExactRational prod = rational_pow(x + y, static_cast<long>(n));
    ++rep.checks;
    if (sum != prod)
      rep.fail("binomial_expand != (x+y)^n at x=" + rat(x) + " y=" + rat(y) +
               " n=" + std::to_string(n));
  }
  return rep;
}

CheckReport verify_negative_series(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "exact/negative-exponent-series"};
  std::mt19937_64 rng(cfg.seed + 1);
  const unsigned long N = 80;
  for (long n = -1; n >= -3; --n) {
    for (std::size_t s = 0; s < 10; ++s) {
      // |x/y| < 1 by construction.
      std::uniform_int_distribution<long> ypick(2, 9);
      long yv = ypick(rng);
      std::uniform_int_distribution<long> xpick(1, yv - 1);
      ExactRational x(xpick(rng)), y(yv);
      ExactRational exact = rational_pow(x + y, n);
      ExactRational partial = binomial_series_partial_int(n, x, y, N);
      ExactRational tol = rational_pow(x / y, static_cast<long>(N / 2));
      if (tol < 0) tol = -tol;
      ExactRational err = partial - exact;
      if (err < 0) err = -err;
      ++rep.checks;
      if (!(err < tol))
        rep.fail("negative series slow at n=" + std::to_string(n) +
                 " x=" + rat(x) + " y=" + rat(y));
    }
  }
  return rep;
}

CheckReport verify_binomial_series(const VerifyConfig&) {
  CheckReport rep{.name = "exact/binomial-series"};
  // (1+9/16)^{1/2} = 5/4, partial sum through N=60 within 10^-10.
  {
    ExactRational partial =
        binomial_series_partial(ExactRational(1, 2), ExactRational(9, 16), 60);
    ExactRational err = partial - ExactRational(5, 4);
    if (err < 0) err = -err;
    ++rep.checks;
    if (!(err < ExactRational(1, 10000000000L)))
      rep.fail("sqrt series: |partial_60 - 5/4| = " + rat(err));
  }
  // (1+1/2)^{-1} = 2/3, partial sum through N=20 within 10^-6.
  {
    ExactRational partial =
        binomial_series_partial(ExactRational(-1), ExactRational(1, 2), 20);
    ExactRational err = partial - ExactRational(2, 3);
    if (err < 0) err = -err;
    ++rep.checks;
    if (!(err < ExactRational(1, 1000000L)))
      rep.fail("geometric series: |partial_20 - 2/3| = " + rat(err));
  }
  // Truncation exactness: C(2,k) = 0 for k > 2.
  {
    ExactRational partial =
        binomial_series_partial(ExactRational(2), ExactRational(1, 3), 25);
    ++rep.checks;
    if (partial != ExactRational(16, 9))
      rep.fail("polynomial truncation: partial != (4/3)^2");
  }
  return rep;
}

std::pair<CheckReport, CheckReport> verify_lucas_kummer(
    const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport lucas{.name = "padic/lucas-vs-exact"};
  CheckReport kummer{.name = "padic/kummer-vs-exact"};
  const unsigned primes[] = {2, 3, 5, 7};
  const unsigned long N = cfg.lucas_n_max;
  std::vector<ExactInt> row{1};
  for (unsigned long n = 0; n <= N; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      for (unsigned p : primes) {
        unsigned long expected = mpz_fdiv_ui(row[k].get_mpz_t(), p);
        ++lucas.checks;
        if (lucas_binomial_mod_p(n, k, p) != expected) {
          lucas.fail("lucas mismatch at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " p=" + std::to_string(p));
        }
        ExactInt scratch;
        std::size_t v = static_cast<std::size_t>(mpz_remove(
            scratch.get_mpz_t(), row[k].get_mpz_t(),
            ExactInt(static_cast<long>(p)).get_mpz_t()));
        ++kummer.checks;
        if (kummer_valuation(ExactInt(static_cast<long>(n)),
                             ExactInt(static_cast<long>(k)), p) != v) {
          kummer.fail("kummer mismatch at n=" + std::to_string(n) +
                      " k=" + std::to_string(k) + " p=" + std::to_string(p));
        }
      }
    }
    row.push_back(1);
    for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
  }
  return {lucas, kummer};
}

CheckReport verify_digit_roundtrip(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "padic/digit-roundtrip"};
  for (unsigned long base : {2ul, 3ul, 4ul, 5ul, 9ul}) {
    for (unsigned long n = 0; n <= cfg.digit_roundtrip_max; ++n) {
      ExactInt v(static_cast<long>(n));
      ++rep.checks;
      if (from_digits(digits_of(v, base), base) != v) {
        rep.fail("roundtrip failed at n=" + std::to_string(n) +
                 " base=" + std::to_string(base));
        break;
      }
    }
  }
  return rep;
}

CheckReport verify_ell_subadditivity(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "padic/ell-subadditivity"};
  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_int_distribution<long> pick(0, 1000000);
  for (unsigned long q : {2ul, 3ul, 4ul, 9ul}) {
    for (std::size_t s = 0; s < cfg.subadditivity_pairs / 4; ++s) {
      ExactInt a(pick(rng)), b(pick(rng));
      ExactInt lhs = ell_q(a + b, q);
      ExactInt rhs = ell_q(a, q) + ell_q(b, q) -
                     ExactInt(static_cast<long>(
                         (q - 1) * carries_adding(a, b, q).carry_count()));
      ++rep.checks;
      if (lhs != rhs)
        rep.fail("ell_q identity failed at a=" + to_string(a) +
                 " b=" + to_string(b) + " q=" + std::to_string(q));
    }
  }
  return rep;
}

CheckReport verify_padic_embedding(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "padic/embedding-consistency"};
  std::mt19937_64 rng(cfg.seed + 3);
  for (unsigned p : {2u, 3u, 5u}) {
    PrimePower base = PrimePower::prime(p);
    std::uniform_int_distribution<long> pick(0, 10000);
    for (std::size_t s = 0; s < 500; ++s) {
      long n = pick(rng), k = pick(rng) % (n + 1);
      PAdicTrunc y = PAdicTrunc::embed(ExactInt(n), base, 16);
      ++rep.checks;
      if (binomial_mod_p_padic(y, ExactInt(k)) !=
          lucas_binomial_mod_p(ExactInt(n), ExactInt(k), p))
        rep.fail("embedded binomial != lucas at n=" + std::to_string(n) +
                 " k=" + std::to_string(k) + " p=" + std::to_string(p));
    }
  }
  // -1 embeds with all digits p-1; C(-1,k) mod p = (-1)^k.
  for (unsigned p : {2u, 3u, 5u}) {
    PAdicTrunc minus_one =
        PAdicTrunc::embed(ExactInt(-1), PrimePower::prime(p), 10);
    for (long k = 0; k < 200; ++k) {
      unsigned long expect = (k % 2 == 0) ? 1 : p - 1;
      ++rep.checks;
      if (binomial_mod_p_padic(minus_one, ExactInt(k)) != expect)
        rep.fail("C(-1,k) mod p wrong at k=" + std::to_string(k) +
                 " p=" + std::to_string(p));
    }
  }
  return rep;
}

CheckReport verify_fq_ring_axioms(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "fq/ring-axioms"};
  std::mt19937_64 rng(cfg.seed + 4);
  std::uniform_int_distribution<unsigned> deg(0, 8);
  struct Spec { unsigned p, m0; };
  for (auto [p, m0] : {Spec{2, 1}, Spec{3, 1}, Spec{2, 2}, Spec{3, 2}}) {
    FqFieldPtr f = FqField::make(p, m0);
    for (std::size_t s = 0; s < cfg.random_samples; ++s) {
      FqPoly a = random_poly(f, deg(rng), rng);
      FqPoly b = random_poly(f, deg(rng), rng);
      FqPoly c = random_poly(f, deg(rng), rng);
      ++rep.checks;
      if ((a * b) * c != a * (b * c)) rep.fail("associativity failed");
      if (a * (b + c) != a * b + a * c) rep.fail("distributivity failed");
      if (!b.is_zero()) {
        auto [quot, remv] = a.divrem(b);
        if (quot * b + remv != a || (!remv.is_zero() && remv.degree() >= b.degree()))
          rep.fail("divrem contract failed at a=" + a.to_string() +
                   " b=" + b.to_string());
      }
    }
  }
  return rep;
}

CheckReport verify_frobenius_suite(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "fq/frobenius"};
  struct Spec { unsigned p, m0; };
  for (auto [p, m0] : {Spec{2, 1}, Spec{3, 1}, Spec{2, 2}, Spec{3, 2}}) {
    FqFieldPtr f = FqField::make(p, m0);
    CheckReport sub = frobenius_check(f, cfg.random_samples, cfg.seed + 5);
    rep.checks += sub.checks;
    for (auto& w : sub.failures)
      rep.fail("q=" + std::to_string(f->q()) + ": " + w);
  }
  return rep;
}

CheckReport verify_digit_factorization(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "fq/digit-factorization"};
  FqFieldPtr f2 = FqField::make(2, 1);
  FqFieldPtr f3 = FqField::make(3, 1);
  unsigned long top2 = cfg.quick ? 32 : 64;
  unsigned long top3 = cfg.quick ? 12 : 27;
  for (unsigned long n = 0; n <= top2; ++n) {
    ++rep.checks;
    try {
      digit_factorization(n, f2);
    } catch (const std::logic_error& e) {
      rep.fail("F_2 n=" + std::to_string(n) + ": " + e.what());
    }
  }
  for (unsigned long n = 0; n <= top3; ++n) {
    ++rep.checks;
    try {
      digit_factorization(n, f3);
    } catch (const std::logic_error& e) {
      rep.fail("F_3 n=" + std::to_string(n) + ": " + e.what());
    }
  }
  return rep;
}

CheckReport verify_carlitz_factorials(const VerifyConfig&) {
  CheckReport rep{.name = "carlitz/factorials"};
  // D_k = product of all monic degree-k polynomials; the recursion cross
  // check happens inside build_basis and throws on disagreement.
  struct Spec { unsigned p; unsigned K; };
  for (auto [p, K] : {Spec{2, 3}, Spec{3, 2}}) {
    FqFieldPtr f = FqField::make(p, 1);
    CarlitzBasis basis = build_basis(f, K);
    for (unsigned k = 0; k <= K; ++k) {
      FqPoly prod = FqPoly::constant(f, FqElem::one(f));
      for (const FqPoly& m : enumerate_monic(f, k)) prod = prod * m;
      ++rep.checks;
      if (prod != basis.D[k])
        rep.fail("D_k != monic product at q=" + std::to_string(p) +
                 " k=" + std::to_string(k));
    }
  }
  // Recursion/product agreement across q in {2,3,4} up to k=3.
  for (unsigned m0 : {1u, 2u}) {
    for (unsigned p : {2u, 3u}) {
      if (m0 == 2 && p == 3) continue;  // q=9, K=3 blows the budget
      unsigned K = (m0 == 2) ? 3 : 3;
      ++rep.checks;
      try {
        build_basis(FqField::make(p, m0), K);
      } catch (const std::logic_error& e) {
        rep.fail("basis construction disagreement at p=" + std::to_string(p) +
                 " m0=" + std::to_string(m0) + ": " + e.what());
      }
    }
  }
  return rep;
}

CheckReport verify_carlitz_linearity(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "carlitz/e_k-linearity"};
  std::mt19937_64 rng(cfg.seed + 6);
  struct Spec { unsigned p, m0, K; };
  for (auto [p, m0, K] : {Spec{2, 1, 3}, Spec{3, 1, 2}, Spec{2, 2, 2}}) {
    FqFieldPtr f = FqField::make(p, m0);
    CarlitzBasis basis = build_basis(f, K);
    std::uniform_int_distribution<unsigned long> elem(0, f->q() - 1);
    for (unsigned k = 0; k <= K; ++k) {
      for (std::size_t s = 0; s < 25; ++s) {
        FqPoly x = random_poly(f, 4, rng), y = random_poly(f, 4, rng);
        FqElem a = FqElem::from_index(f, elem(rng));
        FqElem b = FqElem::from_index(f, elem(rng));
        FqPoly lhs = basis.e[k].eval(x * a + y * b);
        FqPoly rhs = basis.e[k].eval(x) * a + basis.e[k].eval(y) * b;
        ++rep.checks;
        if (lhs != rhs)
          rep.fail("e_k not linear at q=" + std::to_string(f->q()) +
                   " k=" + std::to_string(k));
      }
    }
  }
  return rep;
}

CheckReport verify_carlitz_integrality(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "carlitz/integrality"};
  std::size_t samples = cfg.quick ? 40 : 200;
  struct Spec { unsigned p, m0, K; };
  for (auto [p, m0, K] : {Spec{2, 1, 3}, Spec{3, 1, 3}, Spec{2, 2, 3}}) {
    FqFieldPtr f = FqField::make(p, m0);
    CarlitzBasis basis = build_basis(f, K);
    for (unsigned k = 0; k <= K; ++k) {
      CheckReport sub = integrality_check(basis, k, samples, 5, cfg.seed + k);
      rep.checks += sub.checks;
      for (auto& w : sub.failures)
        rep.fail("q=" + std::to_string(f->q()) + " " + w);
    }
  }
  return rep;
}

CheckReport verify_carlitz_binomial(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "carlitz/binomial-identity"};
  {
    FqFieldPtr f = FqField::make(2, 1);
    CarlitzBasis basis = build_basis(f, 3);
    unsigned long top = cfg.quick ? 8 : 16;
    for (unsigned long n = 0; n < top; ++n) {
      CheckReport sub = carlitz_binomial_identity(basis, n);
      rep.checks += sub.checks;
      for (auto& w : sub.failures) rep.fail("q=2 " + w);
    }
  }
  {
    FqFieldPtr f = FqField::make(3, 1);
    CarlitzBasis basis = build_basis(f, 1);
    for (unsigned long n = 0; n < 9; ++n) {
      CheckReport sub = carlitz_binomial_identity(basis, n);
      rep.checks += sub.checks;
      for (auto& w : sub.failures) rep.fail("q=3 " + w);
    }
  }
  return rep;
}

CheckReport verify_carlitz_expand(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "carlitz/expand-roundtrip"};
  std::mt19937_64 rng(cfg.seed + 7);
  struct Spec { unsigned p, d; };
  for (auto [p, d] : {Spec{2, 2}, Spec{3, 1}, Spec{2, 3}}) {
    FqFieldPtr f = FqField::make(p, 1);
    CarlitzBasis basis = build_basis(f, d);
    auto points = enumerate_polys(f, d);
    for (std::size_t s = 0; s < 5; ++s) {
      std::vector<FqPoly> values;
      for (std::size_t i = 0; i < points.size(); ++i)
        values.push_back(random_poly(f, 6, rng));
      ++rep.checks;
      try {
        auto coeffs = expand_in_G(basis, d, values);
        for (std::size_t m = 0; m < points.size(); ++m)
          if (eval_expansion(basis, coeffs, points[m]) != values[m])
            rep.fail("roundtrip mismatch at q=" + std::to_string(p));
      } catch (const std::exception& e) {
        rep.fail("expand failed at q=" + std::to_string(p) + ": " + e.what());
      }
    }
  }
  return rep;
}

namespace {

DividedOperator random_operator(const QuotientRingPtr& ring, std::size_t trunc,
                                std::mt19937_64& rng) {
  std::vector<FqPoly> coeffs;
  int deg = ring->modulus().degree();
  std::uniform_int_distribution<unsigned> d(0, deg > 1 ? deg - 1 : 1);
  for (std::size_t j = 0; j <= trunc; ++j)
    coeffs.push_back(random_poly(ring->field(), d(rng), rng));
  return DividedOperator(ring, std::move(coeffs));
}

}  // namespace

CheckReport verify_operator_algebra(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "measures/operator-algebra"};
  std::mt19937_64 rng(cfg.seed + 8);
  FqFieldPtr f2 = FqField::make(2, 1);
  auto ring = QuotientRing::make(f2, FqPoly::t(f2), 3);
  const std::size_t J = 8;
  std::size_t triples = cfg.quick ? 100 : 1000;
  for (std::size_t s = 0; s < triples; ++s) {
    auto A = random_operator(ring, J, rng);
    auto B = random_operator(ring, J, rng);
    auto C = random_operator(ring, J, rng);
    ++rep.checks;
    if (!(op_mul(op_mul(A, B), C) == op_mul(A, op_mul(B, C))))
      rep.fail("op_mul associativity failed");
    if (!(op_mul(A, B) == op_mul(B, A))) rep.fail("op_mul commutativity failed");
  }
  // The Lucas kernel agrees with exact binomials on the index window.
  for (unsigned long i = 0; i <= 64; ++i)
    for (unsigned long j = 0; j <= 64 - i; ++j)
      for (unsigned p : {2u, 3u}) {
        ++rep.checks;
        ExactInt exact = binomial(ExactInt(static_cast<long>(i + j)),
                                  ExactInt(static_cast<long>(i)));
        if (lucas_binomial_mod_p(i + j, i, p) !=
            mpz_fdiv_ui(exact.get_mpz_t(), p))
          rep.fail("kernel binomial mismatch at i=" + std::to_string(i) +
                   " j=" + std::to_string(j));
      }
  return rep;
}

CheckReport verify_measure_bridge(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "measures/delta-bridge"};
  std::mt19937_64 rng(cfg.seed + 9);
  FqFieldPtr f2 = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f2, 3);
  const std::size_t J = 8;
  // f = t at level 3, and one irreducible of degree 2.
  std::vector<FqPoly> mods = {FqPoly::t(f2),
                              FqPoly::parse(f2, "t^2+t+1")};
  for (const FqPoly& fmod : mods) {
    auto ring = QuotientRing::make(f2, fmod, 3);
    for (std::size_t s = 0; s < cfg.delta_pairs; ++s) {
      FqPoly a = random_poly(f2, 5, rng);
      FqPoly b = random_poly(f2, 5, rng);
      auto da = delta_measure(a, basis, J, ring);
      auto db = delta_measure(b, basis, J, ring);
      auto dab = delta_measure(a + b, basis, J, ring);
      ++rep.checks;
      if (!(op_mul(measure_to_operator(da), measure_to_operator(db)) ==
            measure_to_operator(dab)))
        rep.fail("op(delta_a)op(delta_b) != op(delta_{a+b}) at a=" +
                 a.to_string() + " b=" + b.to_string() +
                 " f=" + fmod.to_string());
      // Convolution face of the same statement plus commutativity.
      if (!(convolve(da, db) == dab)) rep.fail("delta convolution failed");
      if (!(convolve(da, db) == convolve(db, da)))
        rep.fail("convolution not commutative");
      // delta_0 is the identity.
      auto d0 = delta_measure(FqPoly(f2), basis, J, ring);
      if (!(convolve(da, d0) == da)) rep.fail("delta_0 not neutral");
    }
  }
  return rep;
}

CheckReport verify_measure_action(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "measures/function-action"};
  std::mt19937_64 rng(cfg.seed + 10);
  FqFieldPtr f2 = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f2, 3);
  const std::size_t J = 8;
  auto ring = QuotientRing::make(f2, FqPoly::t(f2), 3);
  for (std::size_t s = 0; s < 30; ++s) {
    FqPoly a = random_poly(f2, 4, rng);
    auto mu = delta_measure(a, basis, J, ring);
    std::vector<FqPoly> fc;
    for (std::size_t j = 0; j <= J; ++j) fc.push_back(random_poly(f2, 2, rng));
    CarlitzFunction func{ring, fc};
    CarlitzFunction acted = act_on_function(mu, func);
    // Pointwise: (mu f)(g) = f(g + a) whenever every index stays in range,
    // which holds here because the expansion is supported on [0, J].
    for (std::size_t t = 0; t < 5; ++t) {
      FqPoly g = random_poly(f2, 4, rng);
      FqPoly lhs(f2), rhs(f2);
      for (std::size_t n = 0; n <= J; ++n) {
        lhs = lhs + acted.coeffs[n] * carlitz_G(basis, n, g).num;
        rhs = rhs + func.coeffs[n] * carlitz_G(basis, n, g + a).num;
      }
      ++rep.checks;
      if (ring->reduce(lhs) != ring->reduce(rhs))
        rep.fail("action != shift at a=" + a.to_string() +
                 " g=" + g.to_string());
    }
    // delta_0 acts as the identity.
    auto d0 = delta_measure(FqPoly(f2), basis, J, ring);
    CarlitzFunction same = act_on_function(d0, func);
    ++rep.checks;
    for (std::size_t n = 0; n <= J; ++n)
      if (same.coeffs[n] != ring->reduce(func.coeffs[n]))
        rep.fail("delta_0 action changed the function");
  }
  return rep;
}

CheckReport verify_operator_automorphism(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "measures/sigma-automorphism"};
  std::mt19937_64 rng(cfg.seed + 11);
  FqFieldPtr f2 = FqField::make(2, 1);
  auto ring = QuotientRing::make(f2, FqPoly::t(f2), 3);
  // J = q^3 - 1: the index window [0,7] is closed under any permutation
  // of digit positions 0..2.
  const std::size_t J = 7;
  std::size_t pairs = cfg.quick ? 50 : 200;
  PrimePower base = PrimePower::prime(2);
  for (std::size_t s = 0; s < pairs; ++s) {
    DigitPerm sigma = DigitPerm::random(base, 3, rng);
    auto A = random_operator(ring, J, rng);
    auto B = random_operator(ring, J, rng);
    ++rep.checks;
    if (!(sigma_automorphism(sigma, op_mul(A, B)) ==
          op_mul(sigma_automorphism(sigma, A), sigma_automorphism(sigma, B))))
      rep.fail("sigma(AB) != sigma(A)sigma(B)");
  }
  return rep;
}

CheckReport verify_group_law(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "group/composition"};
  std::mt19937_64 rng(cfg.seed + 12);
  for (unsigned long q : {2ul, 3ul, 4ul}) {
    PrimePower base = (q == 4) ? PrimePower(2, 2) : PrimePower::prime(static_cast<unsigned>(q));
    std::uniform_int_distribution<unsigned long> pick_digit(0, q - 1);
    for (std::size_t s = 0; s < 50; ++s) {
      DigitPerm rho = DigitPerm::random(base, 5, rng);
      DigitPerm tau = DigitPerm::random(base, 5, rng);
      std::vector<unsigned long> digits(6);
      for (auto& d : digits) d = pick_digit(rng);
      PAdicTrunc y(base, digits);
      ++rep.checks;
      if (!(rho_star(rho.compose(tau), y) == rho_star(rho, rho_star(tau, y))))
        rep.fail("composition law failed at q=" + std::to_string(q));
      if (!(rho_star(rho.inverse(), rho_star(rho, y)) == y))
        rep.fail("inverse law failed at q=" + std::to_string(q));
    }
  }
  return rep;
}

CheckReport verify_subgroup_embedding(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "group/subgroup-embedding"};
  std::mt19937_64 rng(cfg.seed + 13);
  // A base-4 digit permutation read as a base-2 permutation on digit
  // blocks of size 2 must act identically on integers.
  PrimePower q4(2, 2), q2(2, 1);
  for (std::size_t s = 0; s < 20; ++s) {
    DigitPerm rho4 = DigitPerm::random(q4, 4, rng);
    std::vector<std::pair<std::size_t, std::size_t>> pairs2;
    for (std::size_t i = 0; i < 4; ++i) {
      pairs2.emplace_back(2 * i, 2 * rho4.apply(i));
      pairs2.emplace_back(2 * i + 1, 2 * rho4.apply(i) + 1);
    }
    DigitPerm rho2(q2, pairs2);
    for (unsigned long n = 0; n < 1024; ++n) {
      ExactInt v(static_cast<long>(n));
      ExactInt via4 = rho_star_int(rho4, v);
      ExactInt via2 = rho_star_int(rho2, v);
      ++rep.checks;
      if (via4 != via2)
        rep.fail("block reading disagrees at n=" + std::to_string(n));
      if (ell_q(v, 4) != ell_q(via4, 4))
        rep.fail("ell_4 not preserved at n=" + std::to_string(n));
      if ((via4 - v) % 3 != 0)
        rep.fail("mod 3 congruence failed at n=" + std::to_string(n));
    }
  }
  return rep;
}

CheckReport verify_basicS_suite(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "group/basicS"};
  std::mt19937_64 rng(cfg.seed + 14);
  for (unsigned long q : {2ul, 3ul, 4ul}) {
    PrimePower base = (q == 4) ? PrimePower(2, 2) : PrimePower::prime(static_cast<unsigned>(q));
    for (std::size_t s = 0; s < cfg.perm_count; ++s) {
      DigitPerm rho = DigitPerm::random(base, 5, rng);
      SampleSpec spec{.precision = 5,
                      .pair_samples = cfg.quick ? 50u : 200u,
                      .seed = cfg.seed + s};
      CheckReport sub = verify_basicS(rho, spec);
      rep.checks += sub.checks;
      for (auto& w : sub.failures) rep.fail("q=" + std::to_string(q) + " " + w);
    }
  }
  return rep;
}

CheckReport verify_symmetry_suite(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "group/binom-symmetries"};
  std::mt19937_64 rng(cfg.seed + 15);
  for (unsigned p : {2u, 3u}) {
    PrimePower base = PrimePower::prime(p);
    for (std::size_t s = 0; s < cfg.perm_count; ++s) {
      DigitPerm sigma = DigitPerm::random(base, 5, rng);
      SampleSpec spec{.precision = 5, .pair_samples = 0, .seed = cfg.seed};
      CheckReport sub = binom_symmetry_check(sigma, spec);
      rep.checks += sub.checks;
      for (auto& w : sub.failures) rep.fail("p=" + std::to_string(p) + " " + w);
    }
  }
  return rep;
}

CheckReport verify_newton_reconstruction(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "mahler/newton-reconstruction"};
  std::mt19937_64 rng(cfg.seed + 16);
  std::uniform_int_distribution<unsigned> deg(0, 15);
  for (std::size_t s = 0; s < 20; ++s) {
    unsigned d = deg(rng);
    std::vector<ExactRational> poly;  // coefficients of a random polynomial
    for (unsigned i = 0; i <= d; ++i) poly.push_back(random_rational(rng, 9));
    auto eval = [&](const ExactRational& x) {
      ExactRational acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
      return acc;
    };
    SampledFunction f;
    for (long i = 0; i <= 20; ++i) f.push_back(eval(ExactRational(i)));
    auto coeffs = newton_coefficients(f);
    for (std::size_t t = 0; t < 50; ++t) {
      ExactRational x = random_rational(rng, 20);
      ++rep.checks;
      if (newton_reconstruct(coeffs, x) != eval(x)) {
        rep.fail("reconstruction mismatch at x=" + rat(x));
        break;
      }
    }
  }
  // Mahler coefficients of C(.,j) are delta sequences.
  for (unsigned long j = 0; j <= 8; ++j) {
    SampledFunction f;
    for (long i = 0; i <= 12; ++i)
      f.push_back(binomial_poly(ExactRational(i), j));
    auto coeffs = newton_coefficients(f);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      ++rep.checks;
      if (coeffs[k] != (k == j ? 1 : 0))
        rep.fail("delta sequence failed at j=" + std::to_string(j) +
                 " k=" + std::to_string(k));
    }
  }
  return rep;
}

CheckReport verify_mahler_profiles(const VerifyConfig&) {
  CheckReport rep{.name = "mahler/decay-profile"};
  // f(x) = 4^x = (1+3)^x has a_k = 3^k, so v_3(a_k) = k.
  SampledFunction f;
  ExactRational v = 1;
  for (int i = 0; i <= 13; ++i, v *= 4) f.push_back(v);
  auto profile = mahler_decay_profile(f, 3);
  for (std::size_t k = 0; k <= 12; ++k) {
    ++rep.checks;
    if (!profile[k] || *profile[k] != static_cast<long>(k))
      rep.fail("v_3(a_k) != k at k=" + std::to_string(k));
  }
  // Polynomial tails are the +infinity sentinel.
  SampledFunction sq;
  for (long i = 0; i <= 10; ++i) sq.push_back(ExactRational(i * i));
  auto p2 = mahler_decay_profile(sq, 5);
  for (std::size_t k = 3; k < p2.size(); ++k) {
    ++rep.checks;
    if (p2[k]) rep.fail("expected vanishing coefficient at k=" + std::to_string(k));
  }
  return rep;
}

CheckReport verify_one_unit(const VerifyConfig& config) {
  auto cfg = config.scaled();
  CheckReport rep{.name = "mahler/one-unit"};
  std::mt19937_64 rng(cfg.seed + 17);
  std::size_t pairs = cfg.quick ? 40 : 200;
  for (unsigned p : {2u, 3u}) {
    FqFieldPtr f = FqField::make(p, 1);
    PrimePower base = PrimePower::prime(p);
    const std::size_t L = 32;
    std::size_t prec = 1;
    for (unsigned long qn = p; qn <= L * 2; qn *= p) ++prec;
    std::uniform_int_distribution<unsigned long> digit(0, p - 1);
    for (std::size_t s = 0; s < pairs; ++s) {
      std::vector<unsigned long> dy(prec), dz(prec);
      for (auto& d : dy) d = digit(rng);
      for (auto& d : dz) d = digit(rng);
      PAdicTrunc y(base, dy), z(base, dz);
      ++rep.checks;
      if (!(one_unit_power(y, L, f) * one_unit_power(z, L, f) ==
            one_unit_power(y.add(z), L, f)))
        rep.fail("one-unit homomorphism failed at p=" + std::to_string(p));
    }
  }
  // Coefficient of u^k equals C(y,k) mod p via the Lucas product.
  for (unsigned p : {2u, 3u}) {
    FqFieldPtr f = FqField::make(p, 1);
    PrimePower base = PrimePower::prime(p);
    const std::size_t L = 64;
    std::size_t prec = 1;
    for (unsigned long qn = p; qn <= L; qn *= p) ++prec;
    std::uniform_int_distribution<unsigned long> digit(0, p - 1);
    std::uniform_int_distribution<unsigned long> kpick(0, L);
    for (std::size_t s = 0; s < pairs; ++s) {
      std::vector<unsigned long> dy(prec);
      for (auto& d : dy) d = digit(rng);
      PAdicTrunc y(base, dy);
      TruncSeries series = one_unit_power(y, L, f);
      unsigned long k = kpick(rng);
      ++rep.checks;
      unsigned long expect = binomial_mod_p_padic(y, ExactInt(static_cast<long>(k)));
      if (series.coeff(k) != FqElem::from_int(f, static_cast<long>(expect)))
        rep.fail("coeff u^k != C(y,k) mod p at p=" + std::to_string(p) +
                 " k=" + std::to_string(k));
    }
  }
  return rep;
}

std::vector<CheckReport> verify_all(const VerifyConfig& cfg) {
  std::vector<CheckReport> reports;
  reports.push_back(verify_pascal_and_symmetry(cfg));
  reports.push_back(verify_binomial_theorem(cfg));
  reports.push_back(verify_negative_series(cfg));
  reports.push_back(verify_binomial_series(cfg));
  auto [lucas, kummer] = verify_lucas_kummer(cfg);
  reports.push_back(lucas);
  reports.push_back(kummer);
  reports.push_back(verify_digit_roundtrip(cfg));
  reports.push_back(verify_ell_subadditivity(cfg));
  reports.push_back(verify_padic_embedding(cfg));
  reports.push_back(verify_fq_ring_axioms(cfg));
  reports.push_back(verify_frobenius_suite(cfg));
  reports.push_back(verify_digit_factorization(cfg));
  reports.push_back(verify_carlitz_factorials(cfg));
  reports.push_back(verify_carlitz_linearity(cfg));
  reports.push_back(verify_carlitz_integrality(cfg));
  reports.push_back(verify_carlitz_binomial(cfg));
  reports.push_back(verify_carlitz_expand(cfg));
  reports.push_back(verify_operator_algebra(cfg));
  reports.push_back(verify_measure_bridge(cfg));
  reports.push_back(verify_measure_action(cfg));
  reports.push_back(verify_operator_automorphism(cfg));
  reports.push_back(verify_group_law(cfg));
  reports.push_back(verify_subgroup_embedding(cfg));
  reports.push_back(verify_basicS_suite(cfg));
  reports.push_back(verify_symmetry_suite(cfg));
  reports.push_back(verify_newton_reconstruction(cfg));
  reports.push_back(verify_mahler_profiles(cfg));
  reports.push_back(verify_one_unit(cfg));
  return reports;
}

}  // namespace binomlab
