#include <doctest.h>

#include "binomlab/mahler.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

namespace {

SampledFunction squares(long top) {
  SampledFunction f;
  for (long i = 0; i <= top; ++i) f.push_back(ExactRational(i * i));
  return f;
}

}  // namespace

TEST_SUITE("mahler") {

TEST_CASE("forward differences") {
  SampledFunction c(6, ExactRational(5));
  auto d = forward_difference(c, 1);
  for (const auto& v : d) CHECK(v == 0);
  auto d2 = forward_difference(squares(8), 2);
  for (const auto& v : d2) CHECK(v == 2);
  CHECK_THROWS_AS(forward_difference(c, 6), std::invalid_argument);
}

TEST_CASE("newton coefficients of x^2") {
  auto coeffs = newton_coefficients(squares(8));
  CHECK(coeffs[0] == 0);
  CHECK(coeffs[1] == 1);
  CHECK(coeffs[2] == 2);
  for (std::size_t k = 3; k < coeffs.size(); ++k) CHECK(coeffs[k] == 0);
  CHECK(newton_reconstruct(coeffs, ExactRational(10)) == 100);
  CHECK(newton_reconstruct(coeffs, ExactRational(1, 2)) == ExactRational(1, 4));
  CHECK(newton_reconstruct({}, ExactRational(3)) == 0);
}

TEST_CASE("decay profiles") {
  SampledFunction f;
  ExactRational v = 1;
  for (int i = 0; i <= 13; ++i, v *= 4) f.push_back(v);
  auto profile = mahler_decay_profile(f, 3);
  for (std::size_t k = 0; k <= 12; ++k) {
    REQUIRE(profile[k].has_value());
    CHECK(*profile[k] == static_cast<long>(k));
  }
  auto p2 = mahler_decay_profile(squares(10), 5);
  for (std::size_t k = 3; k < p2.size(); ++k) CHECK_FALSE(p2[k].has_value());
  // C(x,5) has the delta profile.
  SampledFunction b;
  for (long i = 0; i <= 10; ++i) b.push_back(binomial_poly(ExactRational(i), 5));
  auto p3 = mahler_decay_profile(b, 7);
  for (std::size_t k = 0; k < p3.size(); ++k) {
    if (k == 5)
      CHECK(p3[k] == 0);
    else
      CHECK_FALSE(p3[k].has_value());
  }
  SampledFunction bad{ExactRational(1, 3)};
  CHECK_THROWS_AS(mahler_decay_profile(bad, 3), std::invalid_argument);
}

TEST_CASE("one-unit powers") {
  auto f2 = FqField::make(2, 1);
  PrimePower b2(2, 1);
  SUBCASE("zero exponent") {
    auto s = one_unit_power(PAdicTrunc::embed(0, b2, 4), 6, f2);
    CHECK(s.coeff(0).is_zero() == false);
    for (std::size_t i = 1; i <= 6; ++i) CHECK(s.coeff(i).is_zero());
  }
  SUBCASE("exponent -1 inverts 1+u") {
    auto s = one_unit_power(PAdicTrunc::embed(-1, b2, 4), 6, f2);
    for (std::size_t i = 0; i <= 6; ++i) CHECK(s.coeff(i).is_zero() == false);
    // Cross-check: (1+u) * series = 1 up to truncation.
    std::vector<FqElem> lin(7, FqElem::zero(f2));
    lin[0] = lin[1] = FqElem::one(f2);
    auto prod = s * TruncSeries(f2, lin);
    CHECK(prod.coeff(0) == FqElem::one(f2));
    for (std::size_t i = 1; i <= 6; ++i) CHECK(prod.coeff(i).is_zero());
  }
  SUBCASE("exponent q is the Frobenius power") {
    auto f3 = FqField::make(3, 1);
    auto s = one_unit_power(PAdicTrunc::embed(3, PrimePower(3, 1), 3), 8, f3);
    CHECK(s.coeff(0) == FqElem::one(f3));
    CHECK(s.coeff(3) == FqElem::one(f3));
    for (std::size_t i : {1ul, 2ul, 4ul, 5ul, 6ul, 7ul, 8ul})
      CHECK(s.coeff(i).is_zero());
  }
  SUBCASE("insufficient precision is rejected") {
    CHECK_THROWS_AS(one_unit_power(PAdicTrunc::embed(1, b2, 2), 6, f2),
                    std::invalid_argument);
  }
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  CHECK(verify_newton_reconstruction(cfg).pass());
  CHECK(verify_mahler_profiles(cfg).pass());
  CHECK(verify_one_unit(cfg).pass());
}

}  // TEST_SUITE
