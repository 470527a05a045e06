#pragma once

// Command-line front end. run_cli() parses argv, writes to the given
// streams and returns the exit status, so tests can drive it in-process.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "g2crystal/tropical.hpp"

namespace g2crystal {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitPrecondition = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"module", "lemma51", "sigma", "axioms", "verma", "trop", "udcrystal", "all"};
  return n;
}

struct VerifyOptions {
  std::optional<Mode> force;
  std::optional<VermaPair> pair;
  std::optional<VermaVariant> variant;
};

inline Reports run_suite(const std::string& suite, const Config& cfg, const VerifyOptions& opt) {
  if (suite == "module") return suite_module(cfg);
  if (suite == "lemma51") return check_lemma_coefficients(cfg, opt.force);
  if (suite == "sigma") return suite_sigma(cfg, opt.force);
  if (suite == "axioms") return suite_axioms(cfg, opt.force);
  if (suite == "verma") return suite_verma(cfg, opt.pair, opt.variant);
  if (suite == "trop") return suite_trop(cfg);
  if (suite == "udcrystal") return suite_udcrystal(cfg);
  if (suite == "all") {
    Reports out;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      for (auto& r : run_suite(s, cfg, opt)) out.push_back(std::move(r));
    }
    return out;
  }
  throw UsageError("unknown suite '" + suite + "'");
}

/// Reports gate the status unless informational.
inline bool reports_pass(const Reports& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const VerificationReport& r) { return r.passed() || r.informational(); });
}

inline Json config_json(const Config& cfg) {
  return Json{{"seed", cfg.seed}, {"samples", cfg.samples}, {"coeff_bound", cfg.coeff_bound},
              {"term_budget", cfg.term_budget}};
}

inline Json verify_json(const std::string& suite, const Config& cfg, const VerifyOptions& opt, const Reports& rs) {
  Json c = config_json(cfg);
  if (opt.force) c["mode"] = std::string(to_string(*opt.force));
  if (opt.pair) c["pair"] = std::to_string(opt.pair->i) + "," + std::to_string(opt.pair->j);
  if (opt.variant) c["variant"] = std::string(to_string(*opt.variant));
  Json reports = Json::array();
  for (const auto& r : rs) reports.push_back(r.to_json());
  return Json{{"suite", suite}, {"config", std::move(c)}, {"passed", reports_pass(rs)}, {"reports", std::move(reports)}};
}

inline std::string verify_text(const std::string& suite, const Reports& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.passed() ? "PASS" : "FAIL") << "  " << r.identity() << "  [" << to_string(r.mode()) << ", "
       << r.samples() << " samples]";
    if (r.informational()) os << "  (informational)";
    os << '\n';
    auto clip = [](const std::string& s) { return s.size() > 160 ? s.substr(0, 157) + "..." : s; };
    if (!r.counterexamples().empty()) {
      const auto& c = r.counterexamples().front();
      os << "      at " << clip(c.point.dump()) << ": " << clip(c.lhs) << " != " << clip(c.rhs) << '\n';
      if (r.failures() > 1) os << "      (" << r.failures() << " counterexamples in total)\n";
    }
    for (const auto& f : r.findings()) os << "      finding: " << f.dump() << '\n';
  }
  os << suite << ": " << (reports_pass(rs) ? "passed" : "FAILED") << '\n';
  return os.str();
}

namespace detail {

inline std::vector<long> parse_ints(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed " + what + ": '" + s + "'");
    }
  }
  if (!s.empty() && s.back() == ',') throw UsageError("malformed " + what + ": '" + s + "'");
  return out;
}

inline VermaPair parse_pair(const std::string& s) {
  const auto v = parse_ints(s, "pair");
  if (v.size() != 2 || v[0] < 0 || v[1] < 0 || v[0] > 2 || v[1] > 2 || v[0] == v[1]) {
    throw UsageError("--pair needs two distinct indices in 0..2, e.g. 2,1");
  }
  return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])};
}

inline Cochar parse_seed_point(const std::string& s) {
  const auto v = parse_ints(s, "seed point");
  if (v.size() != 6) throw UsageError("--seed-point needs six integers");
  Cochar xi;
  std::copy(v.begin(), v.end(), xi.begin());
  return xi;
}

/// Registered names, plus e0/e1/e2 for all six coordinates of an operator.
inline std::vector<std::pair<std::string, RationalFunction>> tropical_target(const std::string& name) {
  if (name == "e0" || name == "e1" || name == "e2") {
    const std::size_t i = static_cast<std::size_t>(name[1] - '0');
    const auto e = act_symbolic(i);
    std::vector<std::pair<std::string, RationalFunction>> out;
    for (std::size_t k = 0; k < 6; ++k) out.emplace_back(name + "_x" + std::to_string(k), e[k]);
    return out;
  }
  const NamedFormula* f = find_formula(name);
  if (!f) throw UsageError("unknown formula '" + name + "'");
  return {{name, f->build()}};
}

inline RationalFunction read_expression(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return rational_function_from_json(j);
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine geometric crystal G2(1) on W(varpi_1): verification, tropicalization, export"};
  app.require_subcommand(1);
  app.fallthrough();  // subcommands inherit it, so global flags may follow them

  Config cfg;
  std::string format = "json";
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Samples per sampled check (suites may use more)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--coeff-bound", cfg.coeff_bound, "Max numerator/denominator of sampled rationals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--term-budget", cfg.term_budget, "Symbolic cost limit before falling back to sampling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads, 0 for all cores; output does not depend on it")
      ->capture_default_str();
  app.add_option("--format", format, "json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a certification suite");
  std::string suite;
  std::string pair, variant;
  bool symbolic = false, sampled = false;
  verify->add_option("suite", suite, "module, lemma51, sigma, axioms, verma, trop, udcrystal or all")->required();
  verify->add_option("--pair", pair, "Verma pair i,j");
  verify->add_option("--variant", variant, "Verma variant: paper or literature");
  auto* sym_flag = verify->add_flag("--symbolic", symbolic, "Force symbolic identity checks");
  verify->add_flag("--sampled", sampled, "Force sampled identity checks")->excludes(sym_flag);

  auto* trop = app.add_subcommand("tropicalize", "Piecewise-linear image of a positive formula");
  std::string target, expr_file;
  auto* target_opt = trop->add_option("target", target, "Formula name (see dump-formula --list) or e0, e1, e2");
  trop->add_option("--expr", expr_file, "Rational function JSON file instead of a named target")->excludes(target_opt);

  auto* explore = app.add_subcommand("explore", "Crystal-graph fragment around a point of Z^6");
  int radius = 1;
  std::string seed_point = "0,0,0,0,0,0";
  explore->add_option("--radius", radius, "Steps of e_i, f_i from the seed point")->capture_default_str();
  explore->add_option("--seed-point", seed_point, "Six comma-separated integers")->capture_default_str();

  app.add_subcommand("dump-module", "Basis and the six Chevalley generators as matrices");

  auto* dump_formula = app.add_subcommand("dump-formula", "A transcribed formula as rational-function JSON");
  std::string formula;
  bool list = false;
  auto* formula_opt = dump_formula->add_option("name", formula, "Formula name");
  dump_formula->add_flag("--list", list, "List all formula names")->excludes(formula_opt);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw UsageError("unknown suite '" + suite + "'");
      }
      if (format == "dot") throw UsageError("verify supports --format json or text");
      VerifyOptions opt;
      if (symbolic) opt.force = Mode::symbolic;
      if (sampled) opt.force = Mode::sampled;
      if (!pair.empty()) opt.pair = detail::parse_pair(pair);
      if (!variant.empty()) {
        if (variant == "paper") {
          opt.variant = VermaVariant::paper;
        } else if (variant == "literature") {
          opt.variant = VermaVariant::literature;
        } else {
          throw UsageError("--variant must be paper or literature");
        }
      }
      const Reports rs = run_suite(suite, cfg, opt);
      if (format == "text") {
        out << verify_text(suite, rs);
      } else {
        out << verify_json(suite, cfg, opt, rs).dump(2) << '\n';
      }
      return reports_pass(rs) ? kExitPass : kExitFail;
    }

    if (trop->parsed()) {
      if (format == "dot") throw UsageError("tropicalize supports --format json or text");
      std::vector<std::pair<std::string, RationalFunction>> fs;
      if (!expr_file.empty()) {
        fs.emplace_back("expr", detail::read_expression(expr_file));
      } else if (!target.empty()) {
        fs = detail::tropical_target(target);
      } else {
        throw UsageError("tropicalize needs a target or --expr FILE");
      }
      const auto map = tropicalize_named(fs);
      if (format == "text") {
        for (const auto& [name, q] : map.coordinates) {
          auto side = [&](const TropicalPolynomial& p) {
            std::string s = "max(";
            for (std::size_t k = 0; k < p.forms().size(); ++k) {
              const auto& f = p.forms()[k];
              std::string t;
              for (std::size_t v = 0; v < f.grad.size(); ++v) {
                if (f.grad[v] == 0) continue;
                const long g = f.grad[v];
                t += (t.empty() ? (g < 0 ? "-" : "") : (g < 0 ? " - " : " + "));
                if (std::abs(g) != 1) t += std::to_string(std::abs(g)) + "*";
                t += map.vars->name(v);
              }
              if (f.constant != 0 || t.empty()) t = std::to_string(f.constant) + (t.empty() ? "" : " + " + t);
              s += (k ? ", " : "") + t;
            }
            return s + ")";
          };
          out << name << " = " << side(q.num) << " - " << side(q.den) << '\n';
        }
      } else {
        out << map.to_json().dump(2) << '\n';
      }
      return kExitPass;
    }

    if (explore->parsed()) {
      if (radius < 0) throw UsageError("--radius must be nonnegative");
      if (format == "text") throw UsageError("explore supports --format json or dot");
      const auto g = explore_crystal_graph(detail::parse_seed_point(seed_point), radius, cfg);
      if (format == "dot") {
        out << g.to_dot();
      } else {
        out << g.to_json().dump(2) << '\n';
      }
      return g.consistent() ? kExitPass : kExitFail;
    }

    if (app.got_subcommand("dump-module")) {
      out << dump_module().dump(2) << '\n';
      return kExitPass;
    }

    if (dump_formula->parsed()) {
      if (list) {
        for (const auto& f : named_formulas()) out << f.name << '\n';
        return kExitPass;
      }
      if (formula.empty()) throw UsageError("dump-formula needs a name or --list");
      const NamedFormula* f = find_formula(formula);
      if (!f) throw UsageError("unknown formula '" + formula + "'");
      const RationalFunction rf = f->build();
      if (format == "text") {
        out << formula << " = " << to_text(rf) << '\n';
      } else {
        Json j = to_json(rf);
        j["name"] = formula;
        j["positivity"] = rf.positivity() == Positivity::verified_positive ? "verified_positive" : "not_verified";
        out << j.dump(2) << '\n';
      }
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotPositiveError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace g2crystal
