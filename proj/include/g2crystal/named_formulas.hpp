#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "g2crystal/crystal.hpp"

namespace g2crystal {

struct NamedFormula {
  std::string name;
  std::function<RF()> build;
};

/// Registry of transcribed closed forms, in a fixed order. X_*, M, N, a,
/// C*, D..H, eps*, gamma*, sigma_y* and e{i}_x{k} live over the x table;
/// Y_* and P over the y table.
inline const std::vector<NamedFormula>& named_formulas() {
  static const std::vector<NamedFormula> registry = [] {
    std::vector<NamedFormula> r;
    for (Basis b : kBasis) {
      r.push_back({"X_" + std::string(label(b)), [b] { return formulas::X(b, x_symbols()); }});
    }
    for (Basis b : kBasis) {
      r.push_back({"Y_" + std::string(label(b)), [b] { return formulas::Y(b, y_symbols()); }});
    }
    r.push_back({"M", [] { return formulas::M(x_symbols()); }});
    r.push_back({"N", [] { return formulas::N(x_symbols()); }});
    r.push_back({"P", [] { return formulas::P(y_symbols()); }});
    r.push_back({"a", [] { return formulas::a(x_symbols()); }});
    r.push_back({"C1", [] { return formulas::C1(x_c(), x_symbols()); }});
    r.push_back({"C2", [] { return formulas::C2(x_c(), x_symbols()); }});
    r.push_back({"C3", [] { return formulas::C3(x_c(), x_symbols()); }});
    r.push_back({"C4", [] { return formulas::C4(x_c(), x_symbols()); }});
    r.push_back({"C5", [] { return formulas::C5(x_c(), x_symbols()); }});
    r.push_back({"D", [] { return formulas::D(x_c(), x_symbols()); }});
    r.push_back({"E", [] { return formulas::E(x_symbols()); }});
    r.push_back({"F", [] { return formulas::F(x_c(), x_symbols()); }});
    r.push_back({"G", [] { return formulas::G(x_c(), x_symbols()); }});
    r.push_back({"H", [] { return formulas::H(x_c(), x_symbols()); }});
    for (std::size_t i = 0; i < kRank; ++i) {
      r.push_back({"eps" + std::to_string(i), [i] { return formulas::eps(i, x_symbols()); }});
    }
    for (std::size_t i = 0; i < kRank; ++i) {
      r.push_back({"gamma" + std::to_string(i), [i] { return formulas::gamma(i, x_symbols()); }});
    }
    for (std::size_t k = 0; k < 5; ++k) {
      r.push_back({"sigma_y" + std::to_string(k), [k] { return sigma_symbolic()[k]; }});
    }
    r.push_back({"sigma_y5_printed", [] {
                   const auto x = x_symbols();
                   return formulas::y5_printed(x, formulas::sigma_head(x));
                 }});
    r.push_back({"sigma_y5_corrected", [] { return sigma_symbolic()[5]; }});
    for (std::size_t i = 0; i < kRank; ++i) {
      for (std::size_t k = 0; k < 6; ++k) {
        r.push_back({"e" + std::to_string(i) + "_x" + std::to_string(k), [i, k] { return act_symbolic(i)[k]; }});
      }
    }
    return r;
  }();
  return registry;
}

inline const NamedFormula* find_formula(const std::string& name) {
  for (const auto& f : named_formulas()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace g2crystal
