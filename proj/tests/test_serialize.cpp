#include <doctest.h>

#include "binomlab/serialize.hpp"

using namespace binomlab;

TEST_SUITE("serialize") {

TEST_CASE("padic round trip") {
  PAdicTrunc y = PAdicTrunc::embed(100, PrimePower(3, 1), 6);
  CHECK(padic_from_json(to_json(y)) == y);
  json broken = to_json(y);
  broken["precision"] = 2;
  CHECK_THROWS_AS(padic_from_json(broken), std::invalid_argument);
}

TEST_CASE("field and polynomial round trip") {
  auto f9 = FqField::make(3, 2);
  auto back = field_from_json(to_json(*f9));
  CHECK(back->same(*f9));
  FqPoly g = FqPoly::parse(f9, "[1,2]*t^3+[0,1]*t+[2,0]");
  CHECK(poly_from_json(to_json(g)) == g);
  CHECK(poly_from_json(to_json(FqPoly(f9))) == FqPoly(f9));
}

TEST_CASE("permutation round trip") {
  PrimePower b2(2, 1);
  DigitPerm rho(b2, {{0, 3}, {3, 1}, {1, 0}});
  DigitPerm back = perm_from_json(to_json(rho), b2);
  for (std::size_t i = 0; i < 6; ++i) CHECK(back.apply(i) == rho.apply(i));
  json wrong = to_json(rho);
  wrong["q"] = 3;
  CHECK_THROWS_AS(perm_from_json(wrong, b2), std::invalid_argument);
}

TEST_CASE("operator and measure round trip") {
  auto f = FqField::make(2, 1);
  auto ring = QuotientRing::make(f, FqPoly::parse(f, "t^2+t+1"), 2);
  DividedOperator op(ring, {FqPoly::parse(f, "t+1"), FqPoly::t(f),
                            FqPoly::parse(f, "t^3+1")});
  CHECK(operator_from_json(to_json(op)) == op);
  FiniteMeasure mu(ring, {FqPoly::parse(f, "1"), FqPoly(f), FqPoly::t(f)});
  CHECK(measure_from_json(to_json(mu)) == mu);
}

TEST_CASE("sampled function round trip") {
  SampledFunction f{ExactRational(1, 3), ExactRational(-7), ExactRational(0)};
  CHECK(sampled_from_json(sampled_to_json(f)) == f);
}

TEST_CASE("report shape") {
  CheckReport rep{.name = "demo"};
  rep.checks = 3;
  rep.fail("witness");
  json j = to_json(rep);
  CHECK(j["pass"] == false);
  CHECK(j["counterexamples"].size() == 1);
}

}  // TEST_SUITE
