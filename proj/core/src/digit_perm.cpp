#include "binomlab/digit_perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace binomlab {

DigitPerm::DigitPerm(
    PrimePower q,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : q_(q) {
  std::set<std::size_t> sources, targets;
  for (auto [i, j] : pairs) {
    if (!sources.insert(i).second)
      throw std::invalid_argument("DigitPerm: duplicate source position");
    if (!targets.insert(j).second)
      throw std::invalid_argument("DigitPerm: duplicate target position");
    if (i != j) map_[i] = j;
  }
  // A finitely-supported permutation must permute its own support.
  if (sources != targets)
    throw std::invalid_argument("DigitPerm: pairs are not a permutation");
}

DigitPerm DigitPerm::random(PrimePower q, std::size_t support_bound,
                            std::mt19937_64& rng) {
  std::vector<std::size_t> img(support_bound);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < support_bound; ++i) pairs.emplace_back(i, img[i]);
  return DigitPerm(q, pairs);
}

std::size_t DigitPerm::apply(std::size_t i) const {
  auto it = map_.find(i);
  return it == map_.end() ? i : it->second;
}

DigitPerm DigitPerm::inverse() const {
  DigitPerm inv(q_);
  for (auto [i, j] : map_) inv.map_[j] = i;
  return inv;
}

DigitPerm DigitPerm::compose(const DigitPerm& inner) const {
  DigitPerm out(q_);
  std::set<std::size_t> support;
  for (auto [i, j] : map_) support.insert(i);
  for (auto [i, j] : inner.map_) support.insert(i);
  for (std::size_t i : support) {
    std::size_t j = apply(inner.apply(i));
    if (j != i) out.map_[i] = j;
  }
  return out;
}

std::size_t DigitPerm::support_end() const {
  std::size_t end = 0;
  for (auto [i, j] : map_) end = std::max({end, i + 1, j + 1});
  return end;
}

std::vector<std::pair<std::size_t, std::size_t>> DigitPerm::pairs() const {
  return {map_.begin(), map_.end()};
}

PAdicTrunc rho_star(const DigitPerm& rho, const PAdicTrunc& y) {
  if (rho.support_end() > y.precision())
    throw std::invalid_argument("rho_star: support exceeds precision");
  std::vector<unsigned long> out(y.precision(), 0);
  for (std::size_t i = 0; i < y.precision(); ++i) out[rho.apply(i)] = y.digit(i);
  return PAdicTrunc(y.base(), std::move(out));
}

ExactInt rho_star_int(const DigitPerm& rho, const ExactInt& n) {
  const unsigned long q = rho.base().q;
  if (n >= 0) {
    auto digits = digits_of(n, q);
    std::size_t len = std::max(digits.size(), rho.support_end());
    digits.resize(len, 0);
    std::vector<unsigned long> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) out[rho.apply(i)] = digits[i];
    return from_digits(out, q);
  }
  // Complement embedding: pick a precision past the support so permuting
  // only rearranges faithful digits; the all-(q-1) tail above is fixed.
  std::size_t prec = rho.support_end() + digits_of(-n, q).size() + 1;
  PAdicTrunc emb = PAdicTrunc::embed(n, rho.base(), prec);
  ExactInt qn = 1;
  for (std::size_t i = 0; i < prec; ++i) qn *= static_cast<long>(q);
  return rho_star(rho, emb).value() - qn;
}

namespace {

unsigned long pow_ul(unsigned long b, std::size_t e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

// rho_* on small nonnegative machine integers, digit-permuted in base q.
unsigned long star_ul(const DigitPerm& rho, unsigned long v) {
  const unsigned long q = rho.base().q;
  unsigned long out = 0;
  for (std::size_t i = 0; v != 0; ++i, v /= q)
    out += (v % q) * pow_ul(q, rho.apply(i));
  return out;
}

std::string show_pairs(const DigitPerm& rho) {
  std::ostringstream os;
  os << "{";
  for (auto [i, j] : rho.pairs()) os << i << "->" << j << " ";
  os << "}";
  return os.str();
}

}  // namespace

CheckReport verify_basicS(const DigitPerm& rho, const SampleSpec& spec) {
  CheckReport rep{.name = "basicS"};
  const unsigned long q = rho.base().q;
  const std::size_t N = spec.precision;
  if (rho.support_end() > N)
    throw std::invalid_argument("verify_basicS: support exceeds precision");
  const unsigned long bound = pow_ul(q, N);
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<unsigned long> pick(0, bound - 1);
  std::uniform_int_distribution<unsigned long> pick_digit(0, q - 1);

  // Part 1: bijectivity on the truncated window.
  {
    std::vector<bool> seen(bound, false);
    for (unsigned long v = 0; v < bound; ++v) {
      unsigned long w = star_ul(rho, v);
      ++rep.checks;
      if (w >= bound || seen[w]) {
        rep.fail("part1: collision at v=" + std::to_string(v) + " rho=" +
                 show_pairs(rho));
        continue;
      }
      seen[w] = true;
    }
  }
  // Part 1 surrogate for continuity: agreement on digit positions S
  // transfers to agreement on rho(S).
  for (std::size_t s = 0; s < spec.pair_samples; ++s) {
    unsigned long x = pick(rng), y = pick(rng);
    // Force agreement on a random subset S of positions.
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < N; ++i)
      if (rng() & 1) S.push_back(i);
    auto dx = digits_of(ExactInt(static_cast<long>(x)), q);
    auto dy = digits_of(ExactInt(static_cast<long>(y)), q);
    dx.resize(N, 0);
    dy.resize(N, 0);
    for (std::size_t i : S) dy[i] = dx[i];
    PAdicTrunc px(rho.base(), dx), py(rho.base(), dy);
    PAdicTrunc rx = rho_star(rho, px), ry = rho_star(rho, py);
    ++rep.checks;
    for (std::size_t i : S)
      if (rx.digit(rho.apply(i)) != ry.digit(rho.apply(i)))
        rep.fail("part1-continuity: disagreement after mapping, x=" +
                 std::to_string(x) + " y=" + std::to_string(y));
  }
  // Part 2: semi-additivity on carry-free sums (digits built so that
  // x_i + y_i < q at every position).
  for (std::size_t s = 0; s < spec.pair_samples; ++s) {
    std::vector<unsigned long> dx(N), dy(N);
    for (std::size_t i = 0; i < N; ++i) {
      dx[i] = pick_digit(rng);
      dy[i] = std::uniform_int_distribution<unsigned long>(0, q - 1 - dx[i])(rng);
    }
    ExactInt x = from_digits(dx, q), y = from_digits(dy, q);
    if (carries_adding(x, y, q).carry_count() != 0)
      throw std::logic_error("verify_basicS: carry-free construction broken");
    ++rep.checks;
    if (rho_star_int(rho, x + y) != rho_star_int(rho, x) + rho_star_int(rho, y))
      rep.fail("part2: rho_*(x+y) != rho_*(x)+rho_*(y) at x=" + to_string(x) +
               " y=" + to_string(y));
  }
  // Parts 3-5 on the exhaustive nonnegative window.
  for (unsigned long v = 0; v < bound; ++v) {
    ExactInt n(static_cast<long>(v));
    ExactInt img = rho_star_int(rho, n);
    ++rep.checks;
    if (img < 0) rep.fail("part3: nonnegative mapped negative, n=" + to_string(n));
    if (ell_q(n, q) != ell_q(img, q))
      rep.fail("part4: ell_q changed at n=" + to_string(n));
    if (q > 2 && (img - n) % static_cast<long>(q - 1) != 0)
      rep.fail("part5: n !== rho_*(n) mod q-1 at n=" + to_string(n));
  }
  // Part 3/5 on sampled negatives.
  for (std::size_t s = 0; s < spec.pair_samples; ++s) {
    ExactInt n = -static_cast<long>(pick(rng)) - 1;
    ExactInt img = rho_star_int(rho, n);
    ++rep.checks;
    if (img >= 0) rep.fail("part3: negative mapped nonnegative, n=" + to_string(n));
    if (q > 2 && (img - n) % static_cast<long>(q - 1) != 0)
      rep.fail("part5: negative case failed at n=" + to_string(n));
  }
  return rep;
}

CheckReport binom_symmetry_check(const DigitPerm& sigma,
                                 const SampleSpec& spec) {
  CheckReport rep{.name = "binom-symmetry"};
  if (sigma.base().m0 != 1)
    throw std::invalid_argument("binom_symmetry_check: sigma must act on base-p digits");
  const unsigned p = sigma.base().p;
  const unsigned long bound = pow_ul(p, spec.precision);
  DigitPerm sigma_inv = sigma.inverse();
  for (unsigned long y = 0; y < bound; ++y) {
    unsigned long sy = star_ul(sigma, y);
    for (unsigned long k = 0; k < bound; ++k) {
      unsigned long sk = star_ul(sigma, k);
      unsigned long lhs = lucas_binomial_mod_p(y, k, p);
      unsigned long rhs = lucas_binomial_mod_p(sy, sk, p);
      ++rep.checks;
      if (lhs != rhs)
        rep.fail("symm1: y=" + std::to_string(y) + " k=" + std::to_string(k));
      if (lucas_binomial_mod_p(sy, k, p) !=
          lucas_binomial_mod_p(y, star_ul(sigma_inv, k), p))
        rep.fail("symm3: y=" + std::to_string(y) + " k=" + std::to_string(k));
      if ((lhs == 0) != (rhs == 0))
        rep.fail("symm4: y=" + std::to_string(y) + " k=" + std::to_string(k));
    }
  }
  for (unsigned long i = 0; i < bound; ++i) {
    unsigned long si = star_ul(sigma, i);
    for (unsigned long j = 0; j < bound; ++j) {
      unsigned long sj = star_ul(sigma, j);
      ++rep.checks;
      if (lucas_binomial_mod_p(i + j, i, p) !=
          lucas_binomial_mod_p(si + sj, si, p))
        rep.fail("symm5: i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  }
  return rep;
}

}  // namespace binomlab
