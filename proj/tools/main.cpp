// Command-line frontend for the binomlab library. One binary, verb-noun
// subcommands, JSON or text output. Exit codes: 0 success, 1 property
// failure (counterexamples on stderr), 2 bad flags or malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "binomlab/serialize.hpp"
#include "binomlab/verify.hpp"

using namespace binomlab;

namespace {

struct RunConfig {
  unsigned p = 2;
  unsigned m0 = 1;
  std::size_t precision = 5;
  std::size_t trunc = 8;
  unsigned level = 3;
  std::string modulus = "t";
  unsigned long seed = 7;
  unsigned long budget = 0;  // 0 means leave the env/default alone
  std::string format = "text";

  bool json() const { return format == "json"; }
  PrimePower base() const { return PrimePower(p, m0); }
  FqFieldPtr field() const { return FqField::make(p, m0); }
  unsigned long budget_or_default() const {
    return budget ? budget : default_enumeration_budget();
  }
};

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// Reports go to stdout; counterexamples additionally to stderr. Returns
// the process exit code.
int emit_reports(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    if (!r.pass()) ok = false;
  }
  if (cfg.json()) {
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports)
      std::cout << (r.pass() ? "PASS" : "FAIL") << " " << r.name << " ("
                << r.checks << " checks)\n";
  }
  if (!ok) {
    json bad = json::array();
    for (const auto& r : reports)
      if (!r.pass()) bad.push_back(to_json(r));
    std::cerr << bad.dump(2) << "\n";
    return 1;
  }
  return 0;
}

int emit_report(const RunConfig& cfg, const CheckReport& r) {
  return emit_reports(cfg, {r});
}

json read_json_file(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "characteristic");
  cmd->add_option("--m0", cfg.m0, "extension degree, q = p^m0");
  cmd->add_option("--precision", cfg.precision, "digit precision N");
  cmd->add_option("--trunc", cfg.trunc, "truncation J (or L)");
  cmd->add_option("--level", cfg.level, "quotient level for F_q[t]/(f^level)");
  cmd->add_option("--modulus", cfg.modulus, "prime f of the quotient ring");
  cmd->add_option("--seed", cfg.seed, "RNG seed");
  cmd->add_option("--budget", cfg.budget, "enumeration budget override");
  cmd->add_option("--format", cfg.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact binomial arithmetic, Carlitz basis, digit groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  // ---- binom n k
  std::string arg_n, arg_k, arg_x, arg_y, arg_g;
  auto* c_binom = app.add_subcommand("binom", "C(n,k) exactly");
  c_binom->add_option("n", arg_n)->required();
  c_binom->add_option("k", arg_k)->required();
  add_common(c_binom, cfg);

  // ---- binom-series s x  (partial sum through --trunc terms)
  auto* c_series =
      app.add_subcommand("binom-series", "partial sum of (1+x)^s, exact");
  c_series->add_option("s", arg_x)->required();
  c_series->add_option("x", arg_y)->required();
  add_common(c_series, cfg);

  // ---- newton v0 v1 ... [--eval x]
  std::vector<std::string> arg_values;
  std::string arg_eval;
  auto* c_newton =
      app.add_subcommand("newton", "Newton coefficients of sampled values");
  c_newton->add_option("values", arg_values)->required()->expected(-1);
  c_newton->add_option("--eval", arg_eval, "reconstruct at this rational");
  add_common(c_newton, cfg);

  // ---- lucas n k --p
  auto* c_lucas = app.add_subcommand("lucas", "C(n,k) mod p by digit product");
  c_lucas->add_option("n", arg_n)->required();
  c_lucas->add_option("k", arg_k)->required();
  add_common(c_lucas, cfg);

  // ---- kummer n k --p
  auto* c_kummer = app.add_subcommand("kummer", "v_p(C(n,k)) by carry count");
  c_kummer->add_option("n", arg_n)->required();
  c_kummer->add_option("k", arg_k)->required();
  add_common(c_kummer, cfg);

  // ---- digits n
  auto* c_digits = app.add_subcommand("digits", "base-q digit expansion");
  c_digits->add_option("n", arg_n)->required();
  add_common(c_digits, cfg);

  // ---- frobenius
  auto* c_frob = app.add_subcommand("frobenius", "Frobenius additivity sweep");
  add_common(c_frob, cfg);

  // ---- digit-factor n
  auto* c_dfact = app.add_subcommand(
      "digit-factor", "(x+y)^n as a product over base-q digits");
  c_dfact->add_option("n", arg_n)->required();
  add_common(c_dfact, cfg);

  // ---- carlitz ...
  auto* c_carlitz = app.add_subcommand("carlitz", "Carlitz basis operations");
  c_carlitz->require_subcommand(1);
  auto* cc_basis = c_carlitz->add_subcommand("basis", "e_k and D_k up to --trunc");
  add_common(cc_basis, cfg);
  auto* cc_G = c_carlitz->add_subcommand("G", "G_n(g) as a reduced fraction");
  cc_G->add_option("n", arg_n)->required();
  cc_G->add_option("g", arg_g)->required();
  add_common(cc_G, cfg);
  auto* cc_int =
      c_carlitz->add_subcommand("integrality", "D_k | e_k(g) on random g");
  add_common(cc_int, cfg);
  auto* cc_bin = c_carlitz->add_subcommand("binomial-identity",
                                           "addition formula for G_n");
  cc_bin->add_option("n", arg_n)->required();
  add_common(cc_bin, cfg);
  auto* cc_exp = c_carlitz->add_subcommand(
      "expand", "coefficients of a function given on all g of degree < N");
  cc_exp->add_option("values", arg_values, "q^N polynomial values in canonical order")
      ->required()
      ->expected(-1);
  add_common(cc_exp, cfg);

  // ---- ops ...
  std::string arg_file_a, arg_file_b;
  auto* c_ops = app.add_subcommand("ops", "divided-derivative operator algebra");
  c_ops->require_subcommand(1);
  auto* co_mul = c_ops->add_subcommand("mul", "operator product from JSON");
  co_mul->add_option("a", arg_file_a, "operator JSON file ('-' for stdin)")->required();
  co_mul->add_option("b", arg_file_b)->required();
  add_common(co_mul, cfg);
  auto* co_delta = c_ops->add_subcommand("delta", "moments of the point mass at a");
  co_delta->add_option("a", arg_g, "element of F_q[t]")->required();
  add_common(co_delta, cfg);
  auto* co_conv = c_ops->add_subcommand("convolve", "measure convolution from JSON");
  co_conv->add_option("mu", arg_file_a)->required();
  co_conv->add_option("nu", arg_file_b)->required();
  add_common(co_conv, cfg);
  auto* co_act = c_ops->add_subcommand("act", "apply a measure to a function");
  co_act->add_option("mu", arg_file_a)->required();
  co_act->add_option("f", arg_file_b, "function JSON: {\"coeffs\": [...]}")->required();
  add_common(co_act, cfg);
  auto* co_sigma =
      c_ops->add_subcommand("sigma", "digit-permutation automorphism of an operator");
  co_sigma->add_option("perm", arg_file_a, "permutation JSON")->required();
  co_sigma->add_option("a", arg_file_b, "operator JSON")->required();
  add_common(co_sigma, cfg);

  // ---- group ...
  auto* c_group = app.add_subcommand("group", "digit-permutation group");
  c_group->require_subcommand(1);
  auto* cg_rho = c_group->add_subcommand("rho", "apply rho_* to an integer");
  cg_rho->add_option("perm", arg_file_a, "permutation JSON")->required();
  cg_rho->add_option("n", arg_n)->required();
  add_common(cg_rho, cfg);
  auto* cg_basic =
      c_group->add_subcommand("verify-basicS", "structural sweep on random perms");
  add_common(cg_basic, cfg);
  auto* cg_symm = c_group->add_subcommand(
      "verify-symm", "binomial congruences under digit permutations");
  add_common(cg_symm, cfg);

  // ---- mahler ...
  auto* c_mahler = app.add_subcommand("mahler", "Newton/Mahler machinery");
  c_mahler->require_subcommand(1);
  auto* cm_coeffs =
      c_mahler->add_subcommand("coeffs", "Mahler coefficients of sampled values");
  cm_coeffs->add_option("values", arg_values)->required()->expected(-1);
  add_common(cm_coeffs, cfg);
  auto* cm_decay =
      c_mahler->add_subcommand("decay", "v_p of each Mahler coefficient");
  cm_decay->add_option("values", arg_values)->required()->expected(-1);
  add_common(cm_decay, cfg);
  auto* cm_unit = c_mahler->add_subcommand(
      "one-unit", "(1+u)^y truncated at degree --trunc");
  cm_unit->add_option("y", arg_n, "q-adic exponent (integer of either sign)")->required();
  add_common(cm_unit, cfg);

  // ---- verify-all
  auto* c_all = app.add_subcommand("verify-all", "every invariant suite");
  bool quick = false;
  c_all->add_flag("--quick", quick, "scaled-down sweep sizes");
  add_common(c_all, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_binom) {
      ExactInt v = binomial(parse_int(arg_n), parse_int(arg_k));
      emit(cfg, json{{"n", arg_n}, {"k", arg_k}, {"value", to_string(v)}},
           to_string(v));
      return 0;
    }

    if (*c_series) {
      ExactRational s = parse_rational(arg_x), x = parse_rational(arg_y);
      ExactRational v = binomial_series_partial(s, x, cfg.trunc);
      emit(cfg,
           json{{"s", to_string(s)},
                {"x", to_string(x)},
                {"terms", cfg.trunc},
                {"partial_sum", to_string(v)},
                {"decimal", v.get_d()}},
           to_string(v));
      return 0;
    }

    if (*c_newton || (*c_mahler && *cm_coeffs)) {
      SampledFunction f;
      for (const auto& s : arg_values) f.push_back(parse_rational(s));
      auto coeffs = newton_coefficients(f);
      json jc = json::array();
      std::ostringstream text;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        jc.push_back(to_string(coeffs[k]));
        text << (k ? " " : "") << to_string(coeffs[k]);
      }
      json out{{"coefficients", jc}};
      if (*c_newton && !arg_eval.empty()) {
        ExactRational x = parse_rational(arg_eval);
        ExactRational v = newton_reconstruct(coeffs, x);
        out["eval"] = json{{"x", to_string(x)}, {"value", to_string(v)}};
        text << " | f(" << to_string(x) << ") = " << to_string(v);
      }
      emit(cfg, out, text.str());
      return 0;
    }

    if (*c_lucas) {
      unsigned long v = lucas_binomial_mod_p(parse_int(arg_n),
                                             parse_int(arg_k), cfg.p);
      emit(cfg,
           json{{"n", arg_n}, {"k", arg_k}, {"p", cfg.p}, {"value", v}},
           std::to_string(v));
      return 0;
    }

    if (*c_kummer) {
      std::size_t v = kummer_valuation(parse_int(arg_n), parse_int(arg_k), cfg.p);
      emit(cfg,
           json{{"n", arg_n}, {"k", arg_k}, {"p", cfg.p}, {"valuation", v}},
           std::to_string(v));
      return 0;
    }

    if (*c_digits) {
      PAdicTrunc y = PAdicTrunc::embed(parse_int(arg_n), cfg.base(), cfg.precision);
      std::ostringstream text;
      for (std::size_t i = 0; i < y.precision(); ++i)
        text << (i ? " " : "") << y.digit(i);
      emit(cfg, to_json(y), text.str());
      return 0;
    }

    if (*c_frob) {
      return emit_report(cfg, frobenius_check(cfg.field(), 1000, cfg.seed));
    }

    if (*c_dfact) {
      ExactInt n = parse_int(arg_n);
      if (n < 0) throw std::invalid_argument("digit-factor: n must be >= 0");
      FqBiPoly f = digit_factorization(n.get_ui(), cfg.field(),
                                       cfg.budget_or_default());
      emit(cfg, json{{"n", arg_n}, {"q", cfg.field()->q()},
                     {"expansion", f.to_string()}},
           f.to_string());
      return 0;
    }

    if (*c_carlitz) {
      FqFieldPtr f = cfg.field();
      unsigned K = static_cast<unsigned>(cfg.trunc);
      if (*cc_basis) {
        CarlitzBasis basis = build_basis(f, K, cfg.budget_or_default());
        std::ostringstream text;
        for (unsigned k = 0; k <= K; ++k)
          text << "D_" << k << " = " << basis.D[k].to_string() << "\n";
        emit(cfg, basis_to_json(basis), text.str());
        return 0;
      }
      if (*cc_G) {
        CarlitzBasis basis = build_basis(f, K, cfg.budget_or_default());
        FqRatio v = carlitz_G(basis, parse_int(arg_n).get_ui(),
                              FqPoly::parse(f, arg_g));
        emit(cfg, ratio_to_json(v),
             v.num.to_string() + " / " + v.den.to_string());
        return 0;
      }
      if (*cc_int) {
        CarlitzBasis basis = build_basis(f, K, cfg.budget_or_default());
        std::vector<CheckReport> reports;
        for (unsigned k = 0; k <= K; ++k)
          reports.push_back(integrality_check(basis, k, 200, 5, cfg.seed + k));
        return emit_reports(cfg, reports);
      }
      if (*cc_bin) {
        CarlitzBasis basis = build_basis(f, K, cfg.budget_or_default());
        return emit_report(cfg,
                           carlitz_binomial_identity(basis, parse_int(arg_n).get_ui()));
      }
      if (*cc_exp) {
        unsigned d = static_cast<unsigned>(cfg.precision);
        CarlitzBasis basis = build_basis(f, d, cfg.budget_or_default());
        std::vector<FqPoly> values;
        for (const auto& s : arg_values) values.push_back(FqPoly::parse(f, s));
        auto coeffs = expand_in_G(basis, d, values, cfg.budget_or_default());
        json jc = json::array();
        std::ostringstream text;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          jc.push_back(coeffs[i].to_string());
          text << (i ? " ; " : "") << coeffs[i].to_string();
        }
        emit(cfg, json{{"coefficients", jc}}, text.str());
        return 0;
      }
    }

    if (*c_ops) {
      if (*co_mul) {
        DividedOperator a = operator_from_json(read_json_file(arg_file_a));
        DividedOperator b = operator_from_json(read_json_file(arg_file_b));
        if (!a.ring()->same(*b.ring()))
          throw std::invalid_argument("ops mul: operators live in different rings");
        DividedOperator ab = op_mul(a, b);
        emit(cfg, to_json(ab), "computed; use --format json for coefficients");
        return 0;
      }
      if (*co_delta) {
        FqFieldPtr f = cfg.field();
        auto ring = QuotientRing::make(f, FqPoly::parse(f, cfg.modulus), cfg.level);
        CarlitzBasis basis = build_basis(f, digits_of(ExactInt(static_cast<long>(cfg.trunc)),
                                                       f->q()).size(),
                                         cfg.budget_or_default());
        FiniteMeasure mu = delta_measure(FqPoly::parse(f, arg_g), basis,
                                         cfg.trunc, ring);
        std::ostringstream text;
        for (std::size_t j = 0; j <= mu.trunc(); ++j)
          text << "m_" << j << " = " << mu.moment(j).to_string() << "\n";
        emit(cfg, to_json(mu), text.str());
        return 0;
      }
      if (*co_conv) {
        FiniteMeasure mu = measure_from_json(read_json_file(arg_file_a));
        FiniteMeasure nu = measure_from_json(read_json_file(arg_file_b));
        if (!mu.ring()->same(*nu.ring()))
          throw std::invalid_argument("ops convolve: measures live in different rings");
        emit(cfg, to_json(convolve(mu, nu)),
             "computed; use --format json for moments");
        return 0;
      }
      if (*co_act) {
        FiniteMeasure mu = measure_from_json(read_json_file(arg_file_a));
        json jf = read_json_file(arg_file_b);
        std::vector<FqPoly> coeffs;
        for (const auto& c : jf.at("coeffs"))
          coeffs.push_back(FqPoly::parse(mu.ring()->field(), c.get<std::string>()));
        CarlitzFunction fn{mu.ring(), coeffs};
        CarlitzFunction out = act_on_function(mu, fn);
        json jc = json::array();
        for (const auto& c : out.coeffs) jc.push_back(c.to_string());
        emit(cfg, json{{"ring", ring_to_json(*out.ring)}, {"coeffs", jc}},
             "computed; use --format json for coefficients");
        return 0;
      }
      if (*co_sigma) {
        DividedOperator a = operator_from_json(read_json_file(arg_file_b));
        PrimePower base(a.ring()->field()->p(), a.ring()->field()->m0());
        DigitPerm sigma = perm_from_json(read_json_file(arg_file_a), base);
        emit(cfg, to_json(sigma_automorphism(sigma, a)),
             "computed; use --format json for coefficients");
        return 0;
      }
    }

    if (*c_group) {
      if (*cg_rho) {
        DigitPerm rho = perm_from_json(read_json_file(arg_file_a), cfg.base());
        ExactInt v = rho_star_int(rho, parse_int(arg_n));
        emit(cfg, json{{"n", arg_n}, {"value", to_string(v)}}, to_string(v));
        return 0;
      }
      std::mt19937_64 rng(cfg.seed);
      std::vector<CheckReport> reports;
      for (std::size_t s = 0; s < 20; ++s) {
        DigitPerm rho = DigitPerm::random(cfg.base(), cfg.precision, rng);
        SampleSpec spec{.precision = cfg.precision,
                        .pair_samples = 200,
                        .seed = cfg.seed + s};
        reports.push_back(*cg_basic ? verify_basicS(rho, spec)
                                    : binom_symmetry_check(rho, spec));
      }
      return emit_reports(cfg, reports);
    }

    if (*c_mahler) {
      if (*cm_decay) {
        SampledFunction f;
        for (const auto& s : arg_values) f.push_back(parse_rational(s));
        auto profile = mahler_decay_profile(f, cfg.p);
        json jp = json::array();
        std::ostringstream text;
        for (std::size_t k = 0; k < profile.size(); ++k) {
          if (profile[k]) {
            jp.push_back(*profile[k]);
            text << (k ? " " : "") << *profile[k];
          } else {
            jp.push_back(nullptr);
            text << (k ? " " : "") << "inf";
          }
        }
        emit(cfg, json{{"p", cfg.p}, {"valuations", jp}}, text.str());
        return 0;
      }
      if (*cm_unit) {
        FqFieldPtr f = cfg.field();
        std::size_t needed = 0;
        for (unsigned long qi = 1; qi <= cfg.trunc; qi *= f->q()) ++needed;
        std::size_t prec = std::max(cfg.precision, needed);
        PAdicTrunc y = PAdicTrunc::embed(parse_int(arg_n), cfg.base(), prec);
        TruncSeries series = one_unit_power(y, cfg.trunc, f);
        std::ostringstream text;
        for (std::size_t i = 0; i <= series.trunc(); ++i)
          text << (i ? " " : "") << series.coeff(i).index();
        emit(cfg, to_json(series), text.str());
        return 0;
      }
    }

    if (*c_all) {
      VerifyConfig vcfg;
      vcfg.seed = cfg.seed;
      vcfg.quick = quick;
      return emit_reports(cfg, verify_all(vcfg));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: unhandled subcommand\n";
  return 2;
}
