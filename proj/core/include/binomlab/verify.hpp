#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binomlab/report.hpp"

namespace binomlab {

// Knobs for the verification sweeps. Defaults match the full desk-scale
// ranges; `quick` shrinks them for fast unit-test runs.
struct VerifyConfig {
  unsigned long seed = 7;
  unsigned long lucas_n_max = 1500;
  std::size_t random_samples = 1000;
  std::size_t delta_pairs = 100;
  std::size_t perm_count = 20;
  unsigned long digit_roundtrip_max = 1000000;
  std::size_t subadditivity_pairs = 10000;
  bool quick = false;

  VerifyConfig scaled() const;
};

// exact_core
CheckReport verify_pascal_and_symmetry(const VerifyConfig& cfg);
CheckReport verify_binomial_theorem(const VerifyConfig& cfg);
CheckReport verify_negative_series(const VerifyConfig& cfg);
CheckReport verify_binomial_series(const VerifyConfig& cfg);

// padic_digits (lucas/kummer share one Pascal-table pass)
std::pair<CheckReport, CheckReport> verify_lucas_kummer(const VerifyConfig& cfg);
CheckReport verify_digit_roundtrip(const VerifyConfig& cfg);
CheckReport verify_ell_subadditivity(const VerifyConfig& cfg);
CheckReport verify_padic_embedding(const VerifyConfig& cfg);

// fq_poly
CheckReport verify_fq_ring_axioms(const VerifyConfig& cfg);
CheckReport verify_frobenius_suite(const VerifyConfig& cfg);
CheckReport verify_digit_factorization(const VerifyConfig& cfg);

// carlitz
CheckReport verify_carlitz_factorials(const VerifyConfig& cfg);
CheckReport verify_carlitz_linearity(const VerifyConfig& cfg);
CheckReport verify_carlitz_integrality(const VerifyConfig& cfg);
CheckReport verify_carlitz_binomial(const VerifyConfig& cfg);
CheckReport verify_carlitz_expand(const VerifyConfig& cfg);

// divided_measures
CheckReport verify_operator_algebra(const VerifyConfig& cfg);
CheckReport verify_measure_bridge(const VerifyConfig& cfg);
CheckReport verify_measure_action(const VerifyConfig& cfg);
CheckReport verify_operator_automorphism(const VerifyConfig& cfg);

// digit_group
CheckReport verify_group_law(const VerifyConfig& cfg);
CheckReport verify_subgroup_embedding(const VerifyConfig& cfg);
CheckReport verify_basicS_suite(const VerifyConfig& cfg);
CheckReport verify_symmetry_suite(const VerifyConfig& cfg);

// mahler_newton
CheckReport verify_newton_reconstruction(const VerifyConfig& cfg);
CheckReport verify_mahler_profiles(const VerifyConfig& cfg);
CheckReport verify_one_unit(const VerifyConfig& cfg);

// Every suite above, in a fixed order.
std::vector<CheckReport> verify_all(const VerifyConfig& cfg);

}  // namespace binomlab
