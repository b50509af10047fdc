#include <doctest.h>

#include <algorithm>

#include "binomlab/fq.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

TEST_SUITE("fq") {

TEST_CASE("field construction") {
  auto f4 = FqField::make(2, 2);
  CHECK(f4->q() == 4);
  CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});  // z^2+z+1
  auto f9 = FqField::make(3, 2);
  CHECK(f9->q() == 9);
  CHECK_THROWS_AS(FqField::make(2, std::vector<unsigned>{1, 0, 1}),
                  std::invalid_argument);  // z^2+1 = (z+1)^2 over F_2
}

TEST_CASE("polynomial arithmetic over F_2") {
  auto f = FqField::make(2, 1);
  FqPoly a = FqPoly::parse(f, "t^2+t");
  FqPoly b = FqPoly::parse(f, "t^2+t+1");
  CHECK((a * b).to_string() == "t^4+t");
  CHECK(a + FqPoly(f) == a);
  auto [q, r] = FqPoly::parse(f, "t^3").divrem(FqPoly::t(f));
  CHECK(q.to_string() == "t^2");
  CHECK(r.is_zero());
  CHECK_THROWS_AS(a.divrem(FqPoly(f)), std::domain_error);
}

TEST_CASE("field element inverses") {
  auto f9 = FqField::make(3, 2);
  for (unsigned long i = 1; i < 9; ++i) {
    FqElem a = FqElem::from_index(f9, i);
    CHECK(a * a.inverse() == FqElem::one(f9));
  }
}

TEST_CASE("enumeration in canonical graded order") {
  auto f2 = FqField::make(2, 1);
  auto c = enumerate_polys(f2, 1);
  REQUIRE(c.size() == 2);
  CHECK(c[0].is_zero());
  CHECK(c[1].is_one());
  auto d = enumerate_polys(f2, 2);
  REQUIRE(d.size() == 4);
  CHECK(d[2] == FqPoly::t(f2));
  CHECK(d[3].to_string() == "t+1");
  auto f3 = FqField::make(3, 1);
  CHECK(enumerate_polys(f3, 1).size() == 3);
  auto m = enumerate_monic(f2, 1);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == FqPoly::t(f2));
  CHECK(m[1].to_string() == "t+1");
  CHECK(enumerate_monic(f3, 0) == std::vector<FqPoly>{
            FqPoly::constant(f3, FqElem::one(f3))});
  CHECK(enumerate_monic(f3, 1).size() == 3);
  CHECK_THROWS_AS(enumerate_polys(f3, 20, 100), BudgetExceeded);
}

TEST_CASE("poly index round trip") {
  auto f4 = FqField::make(2, 2);
  for (unsigned long i = 0; i < 64; ++i)
    CHECK(index_of_poly(poly_at(f4, i)) == i);
}

TEST_CASE("parse round trip over an extension") {
  auto f4 = FqField::make(2, 2);
  FqPoly g = FqPoly::parse(f4, "[1,1]*t^3+[0,1]*t+[1,0]");
  CHECK(FqPoly::parse(f4, g.to_string()) == g);
}

TEST_CASE("frobenius additivity") {
  auto f3 = FqField::make(3, 1);
  FqPoly cube = (FqPoly::t(f3) + FqPoly::constant(f3, FqElem::one(f3))).pow(3);
  CHECK(cube == FqPoly::parse(f3, "t^3+1"));
  for (auto [p, m0] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {3, 2}})
    CHECK(frobenius_check(FqField::make(p, m0), 50, 11).pass());
}

TEST_CASE("digit factorization of (x+y)^n") {
  auto f2 = FqField::make(2, 1);
  FqBiPoly e = digit_factorization(6, f2);
  // (x^2+y^2)(x^4+y^4) = x^6 + x^4 y^2 + x^2 y^4 + y^6.
  CHECK(e.terms().size() == 4);
  CHECK(e.coeff(6, 0) == FqElem::one(f2));
  CHECK(e.coeff(4, 2) == FqElem::one(f2));
  CHECK(e.coeff(2, 4) == FqElem::one(f2));
  CHECK(e.coeff(0, 6) == FqElem::one(f2));
  FqBiPoly lin = digit_factorization(1, f2);
  CHECK(lin == FqBiPoly::x(f2) + FqBiPoly::y(f2));
  auto f9 = FqField::make(3, 2);
  FqBiPoly frob = digit_factorization(9, f9);
  CHECK(frob.terms().size() == 2);
  CHECK(frob.coeff(9, 0) == FqElem::one(f9));
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  CHECK(verify_fq_ring_axioms(cfg).pass());
  CHECK(verify_frobenius_suite(cfg).pass());
  CHECK(verify_digit_factorization(cfg).pass());
}

}  // TEST_SUITE
