#pragma once

// The positive geometric crystal on the x chart: the birational map to the
// y chart, and e_i^c / eps_i / gamma_i both in closed form and through the
// general Schubert-cell route.

#include <array>
#include <optional>

#include "g2crystal/formulas.hpp"
#include "g2crystal/schubert.hpp"

namespace g2crystal {

using Point = std::array<BigRational, 6>;

struct SigmaValue {
  BigRational a;
  Point y;             // y0..y5, y5 solved from the 0_2 component
  BigRational y5_printed;
};

/// x -> y at a point. y0..y4 follow the closed forms; y5 is the unique
/// solution of the 0_2 component of v2(y) = a(x) v1(x), read off the
/// expanded products of Y-matrices (that component is affine in y5).
inline SigmaValue sigma(const Point& x) {
  const BigRational zero(0), one(1);
  const auto h = formulas::sigma_head(x);
  const auto v1 = build_v(chart_w1(), x, zero, one);
  // Y1(y5) carries 1/y5, so fit the affine function at y5 = 1 and y5 = 2.
  Point y = formulas::assemble_y(h, one);
  const BigRational at1 = build_v(chart_w2(), y, zero, one)[Basis::zero2];
  y[5] = BigRational(2);
  const BigRational slope = build_v(chart_w2(), y, zero, one)[Basis::zero2] - at1;
  if (slope.is_zero()) throw DomainError("sigma: 0_2 component does not depend on y5");
  y[5] = one + (h.a * v1[Basis::zero2] - at1) / slope;
  return {h.a, y, formulas::y5_printed(x, h)};
}

/// Symbolic x -> y over the x table, y5 in its subtraction-free corrected form.
inline std::array<RF, 6> sigma_symbolic() {
  const auto x = x_symbols();
  const auto h = formulas::sigma_head(x);
  return formulas::assemble_y(h, formulas::y5_corrected(x, h));
}

inline Point sigma_inv(const Point& y) { return formulas::sigma_inv(y); }

/// e0^c by conjugation: y = sigma(x), scale through the Schubert action on
/// the y chart (y0 -> c y0), then map back.
inline Point e0_via_sigma(const BigRational& c, const Point& x) {
  const Point y = sigma(x).y;
  return sigma_inv(schubert_action(chart_w2(), 0, c, y));
}

enum class Route {
  closed_form,  // closed forms on the x chart
  general       // Schubert action for i = 1, 2; conjugation for i = 0
};

inline Point act(std::size_t i, const BigRational& c, const Point& x, Route route = Route::closed_form) {
  if (route == Route::closed_form) return formulas::e(i, c, x);
  if (i == 0) return e0_via_sigma(c, x);
  return schubert_action(chart_w1(), i, c, x);
}

inline BigRational eps_at(std::size_t i, const Point& x, Route route = Route::closed_form) {
  if (route == Route::closed_form) return formulas::eps(i, x);
  if (i == 0) return schubert_eps(chart_w2(), 0, sigma(x).y);
  return schubert_eps(chart_w1(), i, x);
}

inline BigRational gamma_at(std::size_t i, const Point& x, Route route = Route::closed_form) {
  if (route == Route::closed_form) return formulas::gamma(i, x);
  if (i == 0) return schubert_gamma(chart_w2(), 0, sigma(x).y);
  return schubert_gamma(chart_w1(), i, x);
}

/// Symbolic closed-form e_i^c over the x table with symbolic c.
inline std::array<RF, 6> act_symbolic(std::size_t i) { return formulas::e(i, x_c(), x_symbols()); }

/// Composition of actions; the last entry of `ops` is applied first.
struct Step {
  std::size_t i;
  BigRational c;
};

inline Point compose(const std::vector<Step>& ops, Point x, Route route = Route::closed_form) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) x = act(it->i, it->c, x, route);
  return x;
}

}  // namespace g2crystal
