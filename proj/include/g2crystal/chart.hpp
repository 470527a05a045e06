#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2crystal/module.hpp"
#include "g2crystal/rational_function.hpp"

namespace g2crystal {

/// 15 coefficients over a ring T, indexed by Basis.
template <class T>
class ModuleVector {
 public:
  explicit ModuleVector(const T& zero) : c_(kDim, zero) {}

  static ModuleVector basis_vector(Basis b, const T& zero, const T& one) {
    ModuleVector v(zero);
    v[b] = one;
    return v;
  }

  T& operator[](Basis b) { return c_[index_of(b)]; }
  const T& operator[](Basis b) const { return c_[index_of(b)]; }
  T& at(std::size_t k) { return c_.at(k); }
  const T& at(std::size_t k) const { return c_.at(k); }

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    for (std::size_t k = 0; k < kDim; ++k) a.c_[k] = a.c_[k] + b.c_[k];
    return a;
  }
  ModuleVector scaled(const T& k) const {
    ModuleVector v = *this;
    for (auto& x : v.c_) x = x * k;
    return v;
  }

 private:
  std::vector<T> c_;
};

/// g_i applied linearly with integer table coefficients.
template <class T>
ModuleVector<T> apply_generator(Generator g, std::size_t i, const ModuleVector<T>& v, const T& zero) {
  ModuleVector<T> out(zero);
  for (Basis b : kBasis) {
    for (const auto& a : apply_chevalley(g, i, b)) out[a.target] = out[a.target] + v[b] * a.coef;
  }
  return out;
}

/// alpha_i^vee(c): component b scaled by c^{<alpha_i^vee, wt(b)>}.
template <class T>
ModuleVector<T> torus_act(std::size_t i, const T& c, const ModuleVector<T>& v) {
  ModuleVector<T> out = v;
  for (Basis b : kBasis) {
    const int e = coroot_pairing(i, weight_of(b));
    if (e != 0) out[b] = v[b] * pow(c, e);
  }
  return out;
}

/// Y_i(c) v = (sum_k f_i^k / (k! c^k)) alpha_i^vee(c) v, truncated by nilpotency.
template <class T>
ModuleVector<T> y_act(std::size_t i, const T& c, const ModuleVector<T>& v, const T& zero) {
  const unsigned top = i == 2 ? 3 : 2;
  ModuleVector<T> term = torus_act(i, c, v);
  ModuleVector<T> acc = term;
  long factorial = 1;
  for (unsigned k = 1; k <= top; ++k) {
    factorial *= static_cast<long>(k);
    term = apply_generator(Generator::f, i, term, zero);
    acc = acc + term.scaled(1 / (pow(c, static_cast<int>(k)) * factorial));
  }
  return acc;
}

/// Columns of Y_i(c) as a 15x15 matrix, m[r][col] = coefficient of r in Y_i(c)(col).
template <class T>
std::vector<std::vector<T>> y_matrix(std::size_t i, const T& c, const T& zero, const T& one) {
  std::vector<std::vector<T>> m(kDim, std::vector<T>(kDim, zero));
  for (Basis b : kBasis) {
    const auto col = y_act(i, c, ModuleVector<T>::basis_vector(b, zero, one), zero);
    for (std::size_t r = 0; r < kDim; ++r) m[r][index_of(b)] = col.at(r);
  }
  return m;
}

using ReducedWord = std::array<std::size_t, 6>;

inline constexpr ReducedWord kW1 = {0, 1, 2, 1, 2, 1};
inline constexpr ReducedWord kW2 = {2, 1, 2, 1, 0, 1};

/// A torus chart: word position k carries coordinate coords[k].
struct CrystalChart {
  ReducedWord word;
  std::array<std::string, 6> coords;
  Basis seed;
  /// Natural coordinate index (0..5) of the variable at each word position.
  std::array<std::size_t, 6> slot;
};

inline const CrystalChart& chart_w1() {
  static const CrystalChart c{kW1, {"x0", "x1", "x2", "x3", "x4", "x5"}, Basis::b1, {0, 1, 2, 3, 4, 5}};
  return c;
}

inline const CrystalChart& chart_w2() {
  static const CrystalChart c{kW2, {"y2", "y1", "y4", "y3", "y0", "y5"}, Basis::b2bar, {2, 1, 4, 3, 0, 5}};
  return c;
}

/// Natural-order coordinates (x0..x5 or y0..y5) to word-position order.
template <class T>
std::array<T, 6> to_positions(const CrystalChart& chart, const std::array<T, 6>& natural) {
  return {natural[chart.slot[0]], natural[chart.slot[1]], natural[chart.slot[2]],
          natural[chart.slot[3]], natural[chart.slot[4]], natural[chart.slot[5]]};
}

template <class T>
std::array<T, 6> from_positions(const CrystalChart& chart, const std::array<T, 6>& positional) {
  std::array<T, 6> out = positional;
  for (std::size_t k = 0; k < 6; ++k) out[chart.slot[k]] = positional[k];
  return out;
}

/// Y_{i_1}(c_1) ... Y_{i_6}(c_6) applied to the chart's seed vector.
/// `natural` holds the coordinates in natural order.
template <class T>
ModuleVector<T> build_v(const CrystalChart& chart, const std::array<T, 6>& natural, const T& zero, const T& one) {
  const auto pos = to_positions(chart, natural);
  auto v = ModuleVector<T>::basis_vector(chart.seed, zero, one);
  for (std::size_t k = 6; k-- > 0;) v = y_act(chart.word[k], pos[k], v, zero);
  return v;
}

/// {x0..x5, c}.
inline const VarTablePtr& x_table() {
  static const VarTablePtr t = make_var_table({"x0", "x1", "x2", "x3", "x4", "x5", "c"});
  return t;
}

/// {y0..y5, c}.
inline const VarTablePtr& y_table() {
  static const VarTablePtr t = make_var_table({"y0", "y1", "y2", "y3", "y4", "y5", "c"});
  return t;
}

using RF = RationalFunction;

inline std::array<RF, 6> x_symbols() {
  const auto& t = x_table();
  return {RF::variable(t, "x0"), RF::variable(t, "x1"), RF::variable(t, "x2"),
          RF::variable(t, "x3"), RF::variable(t, "x4"), RF::variable(t, "x5")};
}

inline std::array<RF, 6> y_symbols() {
  const auto& t = y_table();
  return {RF::variable(t, "y0"), RF::variable(t, "y1"), RF::variable(t, "y2"),
          RF::variable(t, "y3"), RF::variable(t, "y4"), RF::variable(t, "y5")};
}

inline RF x_c() { return RF::variable(x_table(), "c"); }
inline RF y_c() { return RF::variable(y_table(), "c"); }

/// Symbolic v1(x) over the x table, or v2(y) over the y table.
inline ModuleVector<RF> symbolic_v(const CrystalChart& chart) {
  const bool first = chart.seed == Basis::b1;
  const auto& t = first ? x_table() : y_table();
  return build_v(chart, first ? x_symbols() : y_symbols(), RF::constant(t, 0), RF::constant(t, 1));
}

}  // namespace g2crystal
