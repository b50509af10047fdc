#include <doctest.h>

#include "binomlab/digit_perm.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

TEST_SUITE("digit_group") {

TEST_CASE("permutation plumbing") {
  PrimePower b2(2, 1);
  DigitPerm id(b2);
  CHECK(id.is_identity());
  CHECK(id.support_end() == 0);
  DigitPerm swap01(b2, {{0, 1}, {1, 0}});
  CHECK(swap01.apply(0) == 1);
  CHECK(swap01.apply(7) == 7);
  CHECK(swap01.inverse().apply(1) == 0);
  CHECK(swap01.compose(swap01).is_identity());
  CHECK_THROWS_AS(DigitPerm(b2, {{0, 1}}), std::invalid_argument);  // not a bijection
}

TEST_CASE("digit action on truncated expansions") {
  PrimePower b3(3, 1);
  DigitPerm swap01(b3, {{0, 1}, {1, 0}});
  PAdicTrunc y5 = PAdicTrunc::embed(5, b3, 4);  // digits 2,1
  CHECK(rho_star(swap01, y5).value() == 7);
  PrimePower b2(2, 1);
  DigitPerm swap02(b2, {{0, 2}, {2, 0}});
  CHECK(rho_star(swap02, PAdicTrunc::embed(1, b2, 4)).value() == 4);
  CHECK(rho_star(DigitPerm(b2), PAdicTrunc::embed(9, b2, 5)).value() == 9);
  // Support outside the precision window is rejected.
  DigitPerm wide(b2, {{0, 6}, {6, 0}});
  CHECK_THROWS_AS(rho_star(wide, PAdicTrunc::embed(1, b2, 3)),
                  std::invalid_argument);
}

TEST_CASE("integer action, both signs") {
  PrimePower b3(3, 1);
  DigitPerm swap01(b3, {{0, 1}, {1, 0}});
  CHECK(rho_star_int(swap01, 5) == 7);
  CHECK(rho_star_int(swap01, 0) == 0);
  PrimePower b2(2, 1);
  DigitPerm s01(b2, {{0, 1}, {1, 0}});
  CHECK(rho_star_int(s01, -2) == -3);
  CHECK(rho_star_int(s01, -1) == -1);  // all-ones tail is fixed
  CHECK(rho_star_int(s01, -4) == -4);  // ...11100 has equal swapped digits
  // Sign stabilization: negatives stay negative.
  DigitPerm s02(b2, {{0, 2}, {2, 0}});
  for (long n = -40; n < 0; ++n) CHECK(rho_star_int(s02, n) < 0);
}

TEST_CASE("digit-sum and congruence invariants of the swap example") {
  CHECK(ell_q(5, 3) == 3);
  CHECK(ell_q(7, 3) == 3);
  CHECK((7 - 5) % 2 == 0);  // q - 1 = 2
}

TEST_CASE("structural sweep on explicit permutations") {
  SampleSpec spec{.precision = 4, .pair_samples = 50, .seed = 5};
  PrimePower b2(2, 1), b3(3, 1), b4(2, 2);
  CHECK(verify_basicS(DigitPerm(b2, {{0, 1}, {1, 0}}), spec).pass());
  CHECK(verify_basicS(DigitPerm(b3, {{0, 2}, {2, 1}, {1, 0}}), spec).pass());
  CHECK(verify_basicS(DigitPerm(b4, {{1, 3}, {3, 1}}), spec).pass());
  CHECK(verify_basicS(DigitPerm(b3), spec).pass());
}

TEST_CASE("binomial congruences under digit permutations") {
  PrimePower b2(2, 1);
  DigitPerm swap01(b2, {{0, 1}, {1, 0}});
  // Spot values from the swap example: C(3,1) = C(3,2) = 3, both odd.
  CHECK(lucas_binomial_mod_p(3ul, 1ul, 2u) == 1);
  CHECK(lucas_binomial_mod_p(3ul, 2ul, 2u) == 1);
  SampleSpec spec{.precision = 4, .pair_samples = 0, .seed = 5};
  CHECK(binom_symmetry_check(swap01, spec).pass());
  PrimePower b3(3, 1);
  CHECK(binom_symmetry_check(DigitPerm(b3, {{0, 3}, {3, 0}}), spec).pass());
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  CHECK(verify_group_law(cfg).pass());
  CHECK(verify_subgroup_embedding(cfg).pass());
  CHECK(verify_basicS_suite(cfg).pass());
  CHECK(verify_symmetry_suite(cfg).pass());
}

}  // TEST_SUITE
