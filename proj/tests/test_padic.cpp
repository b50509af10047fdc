#include <doctest.h>

#include "binomlab/padic.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

TEST_SUITE("padic") {

TEST_CASE("digit expansions") {
  CHECK(digits_of(10, 3) == std::vector<unsigned long>{1, 0, 1});
  CHECK(digits_of(0, 7) == std::vector<unsigned long>{0});
  CHECK(digits_of(6, 2) == std::vector<unsigned long>{0, 1, 1});
  CHECK(from_digits({1, 0, 1}, 3) == 10);
  CHECK_THROWS_AS(digits_of(-4, 2), std::invalid_argument);
}

TEST_CASE("digit sums") {
  CHECK(ell_q(10, 3) == 2);
  CHECK(ell_q(0, 5) == 0);
  for (unsigned long q : {2ul, 3ul, 9ul}) {
    ExactInt q5 = 1;
    for (int i = 0; i < 5; ++i) q5 *= static_cast<long>(q);
    CHECK(ell_q(q5, q) == 1);
  }
}

TEST_CASE("carry records") {
  CHECK(carries_adding(2, 2, 2).carry_count() == 1);
  CHECK(carries_adding(0, 981, 3).carry_count() == 0);
  for (unsigned p : {2u, 3u, 5u, 7u})
    CHECK(carries_adding(1, p - 1, p).carry_count() == 1);
  // 7 + 1 base 2: 111 + 1 ripples through three positions.
  CHECK(carries_adding(7, 1, 2).carry_count() == 3);
}

TEST_CASE("lucas digit product") {
  CHECK(lucas_binomial_mod_p(10, 4, 3) == 0);
  CHECK(lucas_binomial_mod_p(7, 3, 2) == 1);
  for (long n : {0l, 9l, 100l, 12345l})
    CHECK(lucas_binomial_mod_p(ExactInt(n), 0, 5) == 1);
  CHECK(lucas_binomial_mod_p(1500ul, 750ul, 7u) ==
        lucas_binomial_mod_p(ExactInt(1500), ExactInt(750), 7));
}

TEST_CASE("kummer carry count") {
  CHECK(kummer_valuation(4, 2, 2) == 1);
  for (unsigned p : {2u, 3u, 5u, 7u})
    CHECK(kummer_valuation(ExactInt(p), 1, p) == 1);
  CHECK(kummer_valuation(6, 3, 3) == 0);  // C(6,3)=20, coprime to 3
  CHECK_THROWS_AS(kummer_valuation(3, 7, 2), std::invalid_argument);
}

TEST_CASE("oracle valuation") {
  CHECK(padic_valuation(20, 2) == 2);
  CHECK(padic_valuation(20, 3) == 0);
  CHECK(padic_valuation(243, 3) == 5);
  CHECK_THROWS_AS(padic_valuation(0, 2), std::domain_error);
}

TEST_CASE("truncated q-adic integers") {
  PrimePower base(2, 1);
  PAdicTrunc y = PAdicTrunc::embed(7, base, 5);
  CHECK(y.digits() == std::vector<unsigned long>{1, 1, 1, 0, 0});
  CHECK(y.value() == 7);
  CHECK_THROWS_AS(PAdicTrunc(base, {0, 2}), std::invalid_argument);
  // Negative integers carry the complement digits.
  PAdicTrunc m1 = PAdicTrunc::embed(-1, PrimePower(3, 1), 4);
  CHECK(m1.digits() == std::vector<unsigned long>{2, 2, 2, 2});
  // Truncated addition wraps at q^precision.
  PAdicTrunc a = PAdicTrunc::embed(5, base, 3);
  PAdicTrunc b = PAdicTrunc::embed(6, base, 3);
  CHECK(a.add(b).value() == 3);  // 11 mod 8
  CHECK_THROWS_AS(PAdicTrunc::embed(-20, base, 3), std::invalid_argument);
}

TEST_CASE("binomial of a truncated q-adic") {
  PrimePower b2(2, 1);
  PAdicTrunc y7 = PAdicTrunc::embed(7, b2, 5);
  CHECK(binomial_mod_p_padic(y7, 3) == lucas_binomial_mod_p(7, 3, 2));
  CHECK(binomial_mod_p_padic(y7, 0) == 1);
  PAdicTrunc m1 = PAdicTrunc::embed(-1, PrimePower(3, 1), 4);
  CHECK(binomial_mod_p_padic(m1, 5) == 2);  // C(2,1)C(2,2) = 2 mod 3
  CHECK_THROWS_AS(binomial_mod_p_padic(m1, 100), std::invalid_argument);
  // Base q = 4 digits reduce mod p = 2: C(11,2) = 55 is odd.
  PAdicTrunc z = PAdicTrunc::embed(11, PrimePower(2, 2), 3);  // digits 3,2,0
  CHECK(binomial_mod_p_padic(z, 2) == lucas_binomial_mod_p(11, 2, 2));
}

TEST_CASE("prime power guards") {
  CHECK_THROWS_AS(PrimePower(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(1, 2), std::invalid_argument);
  CHECK(PrimePower(3, 2).q == 9);
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(1000001));  // 101 * 9901
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  auto [lucas, kummer] = verify_lucas_kummer(cfg);
  CHECK(lucas.pass());
  CHECK(kummer.pass());
  CHECK(verify_digit_roundtrip(cfg).pass());
  CHECK(verify_ell_subadditivity(cfg).pass());
  CHECK(verify_padic_embedding(cfg).pass());
}

}  // TEST_SUITE
