#include <doctest.h>

#include "binomlab/carlitz.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

TEST_SUITE("carlitz") {

TEST_CASE("small basis over F_2") {
  auto f = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f, 2);
  // e_0 = x, D_0 = 1.
  CHECK(basis.e[0] == XPoly::x(f));
  CHECK(basis.D[0].is_one());
  // e_1 = x(x+1) = x^2 + x, D_1 = e_1(t) = t^2 + t.
  CHECK(basis.e[1].coeff(1) == FqPoly::parse(f, "1"));
  CHECK(basis.e[1].coeff(2) == FqPoly::parse(f, "1"));
  CHECK(basis.e[1].degree() == 2);
  CHECK(basis.D[1] == FqPoly::parse(f, "t^2+t"));
  // e_2 = x^4 + (t^2+t+1)x^2 + (t^2+t)x, D_2 = e_2(t^2).
  CHECK(basis.e[2].coeff(4) == FqPoly::parse(f, "1"));
  CHECK(basis.e[2].coeff(2) == FqPoly::parse(f, "t^2+t+1"));
  CHECK(basis.e[2].coeff(1) == FqPoly::parse(f, "t^2+t"));
  CHECK(basis.D[2] == FqPoly::parse(f, "t^8+t^6+t^5+t^3"));
  CHECK(basis.index_bound() == 8);
}

TEST_CASE("factorial product over monic polynomials") {
  auto f3 = FqField::make(3, 1);
  CarlitzBasis basis = build_basis(f3, 2);
  for (unsigned k = 0; k <= 2; ++k) {
    FqPoly prod = FqPoly::constant(f3, FqElem::one(f3));
    for (const FqPoly& m : enumerate_monic(f3, k)) prod = prod * m;
    CHECK(basis.D[k] == prod);
  }
}

TEST_CASE("G values") {
  auto f = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f, 2);
  SUBCASE("empty digit product") {
    FqRatio one = carlitz_G(basis, 0, FqPoly::parse(f, "t^5+t"));
    CHECK(one.num.is_one());
    CHECK(one.den.is_one());
  }
  SUBCASE("G_1 is the identity") {
    FqRatio v = carlitz_G(basis, 1, FqPoly::t(f));
    CHECK(v.num == FqPoly::t(f));
    CHECK(v.den.is_one());
  }
  SUBCASE("G_2 at t^2 reduces exactly") {
    // e_1(t^2)/D_1 = (t^4+t^2)/(t^2+t) = t^2+t: t^4+t^2 = t^2(t+1)^2
    // and t^2+t = t(t+1) over F_2.
    FqRatio v = carlitz_G(basis, 2, FqPoly::parse(f, "t^2"));
    CHECK(v.num == FqPoly::parse(f, "t^2+t"));
    CHECK(v.den.is_one());
  }
  SUBCASE("index overflow is rejected") {
    CHECK_THROWS_AS(carlitz_G(basis, 8, FqPoly::t(f)), std::out_of_range);
  }
}

TEST_CASE("integrality of e_k(g)/D_k") {
  auto f = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f, 2);
  FqPoly g = FqPoly::parse(f, "t^2+t+1");
  FqPoly ek = basis.e[1].eval(g);
  auto [q, r] = ek.divrem(basis.D[1]);
  CHECK(r.is_zero());
  CHECK(integrality_check(basis, 0, 20, 5, 3).pass());
  CHECK(integrality_check(basis, 2, 50, 5, 3).pass());
}

TEST_CASE("addition formula for G_n") {
  auto f = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f, 2);
  for (unsigned long n = 0; n < 8; ++n)
    CHECK(carlitz_binomial_identity(basis, n).pass());
  auto f3 = FqField::make(3, 1);
  CarlitzBasis b3 = build_basis(f3, 1);
  for (unsigned long n = 0; n < 9; ++n)
    CHECK(carlitz_binomial_identity(b3, n).pass());
}

TEST_CASE("expansion in the G basis") {
  auto f = FqField::make(2, 1);
  CarlitzBasis basis = build_basis(f, 2);
  auto points = enumerate_polys(f, 2);
  SUBCASE("constants sit on G_0") {
    FqPoly c = FqPoly::parse(f, "t^3+1");
    std::vector<FqPoly> values(4, c);
    auto coeffs = expand_in_G(basis, 2, values);
    CHECK(coeffs[0] == c);
    for (std::size_t n = 1; n < 4; ++n) CHECK(coeffs[n].is_zero());
  }
  SUBCASE("the identity function is G_1") {
    std::vector<FqPoly> values = points;
    auto coeffs = expand_in_G(basis, 2, values);
    CHECK(coeffs[0].is_zero());
    CHECK(coeffs[1].is_one());
    CHECK(coeffs[2].is_zero());
    CHECK(coeffs[3].is_zero());
  }
  SUBCASE("g -> g^2 round trips through the solve") {
    std::vector<FqPoly> values;
    for (const auto& g : points) values.push_back(g * g);
    auto coeffs = expand_in_G(basis, 2, values);
    for (std::size_t m = 0; m < points.size(); ++m)
      CHECK(eval_expansion(basis, coeffs, points[m]) == values[m]);
  }
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  CHECK(verify_carlitz_factorials(cfg).pass());
  CHECK(verify_carlitz_linearity(cfg).pass());
  CHECK(verify_carlitz_integrality(cfg).pass());
  CHECK(verify_carlitz_binomial(cfg).pass());
  CHECK(verify_carlitz_expand(cfg).pass());
}

}  // TEST_SUITE
