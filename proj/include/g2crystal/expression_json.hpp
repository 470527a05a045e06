#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "g2crystal/rational_function.hpp"

namespace g2crystal {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json poly_terms_to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  const std::size_t n = p.vars()->size();
  for (const auto& t : p.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < n; ++i) exp.push_back(t.mono.exps[i]);
    terms.push_back(Json{{"coef", t.coef.str()}, {"exp", std::move(exp)}});
  }
  return terms;
}

inline LaurentPolynomial poly_terms_from_json(const Json& j, const VarTablePtr& vars) {
  if (!j.is_array()) throw StructuralError("expression JSON: term list must be an array");
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("coef") || !item.contains("exp")) {
      throw StructuralError("expression JSON: term needs 'coef' and 'exp'");
    }
    if (!item["coef"].is_string()) throw StructuralError("expression JSON: 'coef' must be a string");
    const auto& exp = item["exp"];
    if (!exp.is_array() || exp.size() != vars->size()) {
      throw StructuralError("expression JSON: 'exp' length must equal the number of vars");
    }
    Term t;
    t.coef = BigRational::parse(item["coef"].get<std::string>());
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (!exp[i].is_number_integer()) throw StructuralError("expression JSON: exponents must be integers");
      const auto e = exp[i].get<long long>();
      if (e < -32768 || e > 32767) throw StructuralError("expression JSON: exponent out of range");
      t.mono.exps[i] = static_cast<std::int16_t>(e);
    }
    terms.push_back(std::move(t));
  }
  return LaurentPolynomial::from_terms(vars, std::move(terms));
}

}  // namespace detail

/// Plain text such as "2*x0^2*x1 + x3^-1".
inline std::string to_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < p.vars()->size(); ++i) {
      const int e = t.mono.exps[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.vars()->name(i);
      if (e != 1) mono += '^' + std::to_string(e);
    }
    BigRational c = t.coef;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += '-';
    if (mono.empty()) out += c.str();
    else out += (c == BigRational(1) ? "" : c.str() + "*") + mono;
  }
  return out;
}

inline std::string to_text(const RationalFunction& f) {
  const auto& d = f.den();
  if (d.is_constant() && d == LaurentPolynomial::constant(f.vars(), BigRational(1))) return to_text(f.num());
  return "(" + to_text(f.num()) + ") / (" + to_text(d) + ")";
}

/// {"vars":[...], "num":[{"coef":"p/q","exp":[...]}...], "den":[...]}
inline Json to_json(const RationalFunction& f) {
  return Json{{"vars", f.vars()->names()},
              {"num", detail::poly_terms_to_json(f.num())},
              {"den", detail::poly_terms_to_json(f.den())}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("num") || !j.contains("den")) {
    throw StructuralError("expression JSON: expected keys 'vars', 'num', 'den'");
  }
  if (!j["vars"].is_array()) throw StructuralError("expression JSON: 'vars' must be an array");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw StructuralError("expression JSON: variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  auto vars = make_var_table(std::move(names));
  return RationalFunction(detail::poly_terms_from_json(j["num"], vars),
                          detail::poly_terms_from_json(j["den"], vars));
}

}  // namespace g2crystal
