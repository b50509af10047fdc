#include <doctest.h>

#include "binomlab/measure.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

namespace {

QuotientRingPtr make_ring() {
  auto f = FqField::make(2, 1);
  return QuotientRing::make(f, FqPoly::t(f), 3);
}

DividedOperator unit_op(const QuotientRingPtr& ring, std::size_t j,
                        std::size_t trunc) {
  std::vector<FqPoly> c(trunc + 1, FqPoly(ring->field()));
  c[j] = FqPoly::constant(ring->field(), FqElem::one(ring->field()));
  return DividedOperator(ring, std::move(c));
}

}  // namespace

TEST_SUITE("measure") {

TEST_CASE("quotient ring construction") {
  auto f = FqField::make(2, 1);
  auto ring = QuotientRing::make(f, FqPoly::t(f), 3);
  CHECK(ring->modulus() == FqPoly::parse(f, "t^3"));
  CHECK(ring->reduce(FqPoly::parse(f, "t^4+t")) == FqPoly::t(f));
  CHECK_NOTHROW(QuotientRing::make(f, FqPoly::parse(f, "t^2+t+1"), 2));
  CHECK_THROWS_AS(QuotientRing::make(f, FqPoly::parse(f, "t^2+t"), 2),
                  std::invalid_argument);  // reducible
  CHECK_THROWS_AS(QuotientRing::make(f, FqPoly::parse(f, "t"), 0),
                  std::invalid_argument);
}

TEST_CASE("divided derivative products") {
  auto ring = make_ring();
  const std::size_t J = 4;
  // D_1 D_1 = C(2,1) D_2 = 0 in characteristic 2.
  auto d1 = unit_op(ring, 1, J);
  auto p11 = op_mul(d1, d1);
  for (std::size_t j = 0; j <= J; ++j) CHECK(p11.coeff(j).is_zero());
  // D_1 D_2 = C(3,1) D_3 = D_3.
  auto d2 = unit_op(ring, 2, J);
  auto p12 = op_mul(d1, d2);
  CHECK(p12.coeff(3).is_one());
  // D_0 is the identity.
  auto a = DividedOperator(
      ring, {FqPoly::parse(ring->field(), "t+1"), FqPoly::t(ring->field()),
             FqPoly::parse(ring->field(), "t^2"), FqPoly(ring->field()),
             FqPoly::parse(ring->field(), "1")});
  CHECK(op_mul(DividedOperator::identity(ring, J), a) == a);
}

TEST_CASE("delta measures") {
  auto ring = make_ring();
  auto field = ring->field();
  CarlitzBasis basis = build_basis(field, 3);
  auto d0 = delta_measure(FqPoly(field), basis, 8, ring);
  CHECK(d0.moment(0).is_one());
  for (std::size_t j = 1; j <= 8; ++j) CHECK(d0.moment(j).is_zero());
  auto dt = delta_measure(FqPoly::t(field), basis, 8, ring);
  CHECK(dt.moment(1) == FqPoly::t(field));
  auto dt2 = delta_measure(FqPoly::parse(field, "t^2"), basis, 8, ring);
  CHECK(dt2.moment(2) ==
        ring->reduce(FqPoly::parse(field, "t^2+t")));
}

TEST_CASE("convolution") {
  auto ring = make_ring();
  auto field = ring->field();
  CarlitzBasis basis = build_basis(field, 3);
  auto da = delta_measure(FqPoly::parse(field, "t^2+1"), basis, 8, ring);
  auto db = delta_measure(FqPoly::parse(field, "t+1"), basis, 8, ring);
  auto d0 = delta_measure(FqPoly(field), basis, 8, ring);
  CHECK(convolve(da, d0) == da);
  CHECK(convolve(da, db) ==
        delta_measure(FqPoly::parse(field, "t^2+t"), basis, 8, ring));
  CHECK(convolve(da, db) == convolve(db, da));
  CHECK(operator_to_measure(measure_to_operator(da)) == da);
}

TEST_CASE("action on functions") {
  auto ring = make_ring();
  auto field = ring->field();
  CarlitzBasis basis = build_basis(field, 3);
  FqPoly a = FqPoly::parse(field, "t+1");
  auto mu = delta_measure(a, basis, 8, ring);
  // f = G_1: the action shifts the argument, so (mu f) = G_1 + G_1(a).
  std::vector<FqPoly> fc(9, FqPoly(field));
  fc[1] = FqPoly::constant(field, FqElem::one(field));
  CarlitzFunction f{ring, fc};
  CarlitzFunction out = act_on_function(mu, f);
  CHECK(out.coeffs[0] == ring->reduce(a));  // G_1(a) = a
  CHECK(out.coeffs[1].is_one());
  for (std::size_t n = 2; n <= 8; ++n) CHECK(out.coeffs[n].is_zero());
  // Constants scale by the total mass.
  std::vector<FqPoly> cc(9, FqPoly(field));
  cc[0] = FqPoly::parse(field, "t^2");
  CarlitzFunction c{ring, cc};
  CarlitzFunction cout = act_on_function(mu, c);
  CHECK(cout.coeffs[0] == ring->reduce(FqPoly::parse(field, "t^2")));
}

TEST_CASE("digit permutation automorphism") {
  auto ring = make_ring();
  auto field = ring->field();
  PrimePower base(2, 1);
  DigitPerm swap01(base, {{0, 1}, {1, 0}});
  auto a = DividedOperator(
      ring, {FqPoly::parse(field, "1"), FqPoly::parse(field, "t"),
             FqPoly::parse(field, "t+1"), FqPoly::parse(field, "t^2")});
  auto out = sigma_automorphism(swap01, a);
  CHECK(out.coeff(0) == a.coeff(0));
  CHECK(out.coeff(1) == a.coeff(2));  // index 1 -> 2 under the digit swap
  CHECK(out.coeff(2) == a.coeff(1));
  CHECK(out.coeff(3) == a.coeff(3));
  CHECK(sigma_automorphism(DigitPerm(base), a) == a);
  // A window not closed under the permutation is rejected.
  DigitPerm swap02(base, {{0, 2}, {2, 0}});
  CHECK_THROWS_AS(sigma_automorphism(swap02, a), std::invalid_argument);
}

TEST_CASE("verification sweeps") {
  VerifyConfig cfg;
  cfg.quick = true;
  CHECK(verify_operator_algebra(cfg).pass());
  CHECK(verify_measure_bridge(cfg).pass());
  CHECK(verify_measure_action(cfg).pass());
  CHECK(verify_operator_automorphism(cfg).pass());
}

}  // TEST_SUITE
