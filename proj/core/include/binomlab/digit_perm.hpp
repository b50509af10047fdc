#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "binomlab/padic.hpp"
#include "binomlab/report.hpp"

namespace binomlab {

// A finitely-supported permutation of digit positions {0,1,2,...},
// stored sparsely as the off-identity pairs (i, rho(i)).
class DigitPerm {
 public:
  explicit DigitPerm(PrimePower q) : q_(q) {}  // identity
  DigitPerm(PrimePower q,
            const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  static DigitPerm random(PrimePower q, std::size_t support_bound,
                          std::mt19937_64& rng);

  const PrimePower& base() const { return q_; }
  std::size_t apply(std::size_t i) const;
  DigitPerm inverse() const;
  DigitPerm compose(const DigitPerm& inner) const;  // this after inner
  bool is_identity() const { return map_.empty(); }

  // Largest position touched, plus one; 0 for the identity.
  std::size_t support_end() const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

 private:
  PrimePower q_;
  std::map<std::size_t, std::size_t> map_;  // off-identity entries only
};

// rho_*: digit at position i moves to position rho(i). Requires
// support(rho) within the precision window.
PAdicTrunc rho_star(const DigitPerm& rho, const PAdicTrunc& y);

// rho_* on integers of either sign via the q-adic expansion. Negative
// integers go through the complement embedding at a precision chosen
// past the support, where the all-(q-1) tail is faithful.
ExactInt rho_star_int(const DigitPerm& rho, const ExactInt& n);

// Sampling parameters for the verification sweeps; fixed seed makes
// reports reproducible.
struct SampleSpec {
  std::size_t precision = 5;
  std::size_t pair_samples = 200;
  unsigned long seed = 1;
};

// Checks the five structural properties of rho_*: bijectivity (with a
// digit-agreement continuity surrogate), semi-additivity without carries,
// sign stabilization, ell_q preservation, and congruence mod q-1.
CheckReport verify_basicS(const DigitPerm& rho, const SampleSpec& spec);

// Checks the four binomial-coefficient congruences under a digit
// permutation sigma of base-p positions, exhaustively for arguments
// < p^spec.precision.
CheckReport binom_symmetry_check(const DigitPerm& sigma,
                                 const SampleSpec& spec);

}  // namespace binomlab
