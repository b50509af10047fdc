#pragma once

#include <json.hpp>

#include "binomlab/carlitz.hpp"
#include "binomlab/digit_perm.hpp"
#include "binomlab/fq.hpp"
#include "binomlab/mahler.hpp"
#include "binomlab/measure.hpp"
#include "binomlab/padic.hpp"
#include "binomlab/report.hpp"

namespace binomlab {

using json = nlohmann::json;

inline json to_json(const CheckReport& rep) {
  return json{{"name", rep.name},
              {"checks", rep.checks},
              {"pass", rep.pass()},
              {"counterexamples", rep.failures}};
}

inline json to_json(const PAdicTrunc& y) {
  return json{{"p", y.base().p},
              {"m0", y.base().m0},
              {"digits", y.digits()},
              {"precision", y.precision()}};
}

inline PAdicTrunc padic_from_json(const json& j) {
  PrimePower base(j.at("p").get<unsigned>(), j.at("m0").get<unsigned>());
  auto digits = j.at("digits").get<std::vector<unsigned long>>();
  if (j.contains("precision") &&
      j.at("precision").get<std::size_t>() != digits.size())
    throw std::invalid_argument("PAdicTrunc json: precision != digit count");
  return PAdicTrunc(base, std::move(digits));
}

inline json to_json(const FqField& f) {
  return json{{"p", f.p()}, {"m0", f.m0()}, {"modulus", f.modulus()}};
}

inline FqFieldPtr field_from_json(const json& j) {
  unsigned p = j.at("p").get<unsigned>();
  if (j.contains("modulus"))
    return FqField::make(p, j.at("modulus").get<std::vector<unsigned>>());
  return FqField::make(p, j.value("m0", 1u));
}

inline json to_json(const FqPoly& g) {
  std::vector<std::vector<unsigned>> coeffs;
  for (const auto& c : g.coeffs()) coeffs.push_back(c.coeffs());
  return json{{"field", to_json(*g.field())}, {"coeffs", coeffs}};
}

inline FqPoly poly_from_json(const json& j) {
  FqFieldPtr f = field_from_json(j.at("field"));
  std::vector<FqElem> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.push_back(FqElem(f, c.get<std::vector<unsigned>>()));
  return FqPoly(f, std::move(coeffs));
}

inline json to_json(const DigitPerm& rho) {
  json pairs = json::array();
  for (auto [i, k] : rho.pairs()) pairs.push_back(json::array({i, k}));
  return json{{"q", rho.base().q}, {"pairs", pairs}};
}

inline DigitPerm perm_from_json(const json& j, const PrimePower& base) {
  if (j.contains("q") && j.at("q").get<unsigned long>() != base.q)
    throw std::invalid_argument("DigitPerm json: q mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& pr : j.at("pairs"))
    pairs.emplace_back(pr.at(0).get<std::size_t>(),
                       pr.at(1).get<std::size_t>());
  return DigitPerm(base, pairs);
}

inline json ring_to_json(const QuotientRing& ring) {
  return json{{"p", ring.field()->p()},
              {"m0", ring.field()->m0()},
              {"modulus", ring.field()->modulus()},
              {"f", ring.f().to_string()},
              {"level", ring.level()}};
}

inline QuotientRingPtr ring_from_json(const json& j) {
  FqFieldPtr field = field_from_json(j);
  FqPoly f = FqPoly::parse(field, j.at("f").get<std::string>());
  return QuotientRing::make(field, f, j.at("level").get<unsigned>());
}

inline json to_json(const DividedOperator& op) {
  json coeffs = json::array();
  for (const auto& c : op.coeffs()) coeffs.push_back(c.to_string());
  return json{{"ring", ring_to_json(*op.ring())}, {"coeffs", coeffs}};
}

inline DividedOperator operator_from_json(const json& j) {
  QuotientRingPtr ring = ring_from_json(j.at("ring"));
  std::vector<FqPoly> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.push_back(FqPoly::parse(ring->field(), c.get<std::string>()));
  return DividedOperator(ring, std::move(coeffs));
}

inline json to_json(const FiniteMeasure& mu) {
  json moments = json::array();
  for (const auto& m : mu.moments()) moments.push_back(m.to_string());
  return json{{"ring", ring_to_json(*mu.ring())}, {"moments", moments}};
}

inline FiniteMeasure measure_from_json(const json& j) {
  QuotientRingPtr ring = ring_from_json(j.at("ring"));
  std::vector<FqPoly> moments;
  for (const auto& m : j.at("moments"))
    moments.push_back(FqPoly::parse(ring->field(), m.get<std::string>()));
  return FiniteMeasure(ring, std::move(moments));
}

inline json basis_to_json(const CarlitzBasis& basis) {
  json D = json::array();
  for (const auto& d : basis.D) D.push_back(d.to_string());
  return json{{"q", basis.field->q()}, {"K", basis.K}, {"D", D}};
}

inline json ratio_to_json(const FqRatio& r) {
  return json{{"num", r.num.to_string()}, {"den", r.den.to_string()}};
}

inline json to_json(const TruncSeries& s) {
  std::vector<std::vector<unsigned>> coeffs;
  for (const auto& c : s.coeffs()) coeffs.push_back(c.coeffs());
  return json{{"field", to_json(*s.field())},
              {"coeffs", coeffs},
              {"L", s.trunc()}};
}

inline json sampled_to_json(const SampledFunction& f) {
  std::vector<std::string> values;
  for (const auto& v : f) values.push_back(to_string(v));
  return json{{"values", values}};
}

inline SampledFunction sampled_from_json(const json& j) {
  SampledFunction f;
  for (const auto& v : j.at("values"))
    f.push_back(parse_rational(v.get<std::string>()));
  return f;
}

}  // namespace binomlab
