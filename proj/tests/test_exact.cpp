#include <doctest.h>

#include "binomlab/exact.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

TEST_SUITE("exact") {

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 7) == 0);  // k > n vanishes
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(52, 26) == ExactInt("495918532948104"));
  CHECK_THROWS_AS(binomial(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial(4, -1), std::invalid_argument);
}

TEST_CASE("binomial polynomial at rational arguments") {
  CHECK(binomial_poly(ExactRational(1, 2), 2) == ExactRational(-1, 8));
  CHECK(binomial_poly(ExactRational(7), 3) == ExactRational(35));
  for (long n = 0; n <= 12; ++n)
    CHECK(binomial_poly(ExactRational(n), static_cast<unsigned long>(n)) == 1);
  CHECK(binomial_poly(ExactRational(-1), 5) == ExactRational(-1));
  CHECK(binomial_poly(ExactRational(3, 4), 0) == 1);
}

TEST_CASE("binomial expansion equals the power") {
  CHECK(binomial_expand(1, 1, 4) == 16);
  CHECK(binomial_expand(2, 3, 3) == 125);
  CHECK(binomial_expand(0, ExactRational(7), 5) == rational_pow(ExactRational(7), 5));
  CHECK(binomial_expand(ExactRational(1, 3), ExactRational(2, 3), 6) == 1);
}

TEST_CASE("partial series against closed forms") {
  // Geometric: (1+1/2)^{-1} = 2/3.
  ExactRational g = binomial_series_partial(ExactRational(-1), ExactRational(1, 2), 20);
  ExactRational err = g - ExactRational(2, 3);
  if (err < 0) err = -err;
  CHECK(err < ExactRational(1, 1000000L));
  // Polynomial exponent truncates exactly.
  for (unsigned long N = 2; N < 8; ++N)
    CHECK(binomial_series_partial(ExactRational(2), ExactRational(1, 3), N) ==
          ExactRational(16, 9));
  // Square root: (1+9/16)^{1/2} = 5/4.
  ExactRational s = binomial_series_partial(ExactRational(1, 2), ExactRational(9, 16), 60);
  err = s - ExactRational(5, 4);
  if (err < 0) err = -err;
  CHECK(err < ExactRational(1, 10000000000L));
}

TEST_CASE("integer-exponent series with negative n") {
  // (1+1/3)^{-2} = 9/16; x=1/3, y=1.
  ExactRational v = binomial_series_partial_int(-2, ExactRational(1, 3),
                                                ExactRational(1), 60);
  ExactRational err = v - ExactRational(9, 16);
  if (err < 0) err = -err;
  CHECK(err < ExactRational(1, 1000000000L));
  CHECK(binomial_series_partial_int(3, ExactRational(2), ExactRational(3), 10) == 125);
}

TEST_CASE("rational powers and parsing") {
  CHECK(rational_pow(ExactRational(2, 3), -2) == ExactRational(9, 4));
  CHECK(rational_pow(ExactRational(5), 0) == 1);
  CHECK_THROWS_AS(rational_pow(ExactRational(0), -1), std::domain_error);
  CHECK(parse_int("-123") == -123);
  CHECK(parse_rational("22/7") == ExactRational(22, 7));
  CHECK(parse_rational("-3/9") == ExactRational(-1, 3));
  CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  CHECK(verify_pascal_and_symmetry(cfg).pass());
  CHECK(verify_binomial_theorem(cfg).pass());
  CHECK(verify_negative_series(cfg).pass());
  CHECK(verify_binomial_series(cfg).pass());
}

}  // TEST_SUITE
