#pragma once

// Ultra-discretization: positive rational functions to max-plus piecewise
// linear maps over Z, the valuation oracle they are checked against, the
// induced operators on Z^6, and crystal-graph export.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "g2crystal/checks.hpp"

namespace g2crystal {

/// constant + <gradient, xi>.
struct AffineForm {
  long constant = 0;
  std::vector<long> grad;

  long evaluate(std::span<const long> xi) const {
    long v = constant;
    for (std::size_t k = 0; k < grad.size(); ++k) v += grad[k] * xi[k];
    return v;
  }

  friend auto operator<=>(const AffineForm&, const AffineForm&) = default;
};

/// max over a nonempty set of affine forms, kept sorted and deduplicated.
class TropicalPolynomial {
 public:
  TropicalPolynomial(VarTablePtr vars, std::vector<AffineForm> forms) : vars_(std::move(vars)), forms_(std::move(forms)) {
    if (forms_.empty()) throw StructuralError("TropicalPolynomial: no forms");
    for (const auto& f : forms_) {
      if (f.grad.size() != vars_->size()) throw StructuralError("TropicalPolynomial: gradient has wrong arity");
    }
    std::sort(forms_.begin(), forms_.end());
    forms_.erase(std::unique(forms_.begin(), forms_.end()), forms_.end());
  }

  static TropicalPolynomial zero(VarTablePtr vars) {
    const std::size_t n = vars->size();
    return TropicalPolynomial(std::move(vars), {AffineForm{0, std::vector<long>(n, 0)}});
  }

  /// Image of a polynomial with positive coefficients: one form per
  /// monomial, constant 0.
  static TropicalPolynomial of(const LaurentPolynomial& p) {
    if (p.is_zero()) throw NotPositiveError("tropicalize: zero polynomial");
    std::vector<AffineForm> forms;
    forms.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (t.coef.sign() <= 0) throw NotPositiveError("tropicalize: negative coefficient");
      AffineForm f{0, std::vector<long>(p.vars()->size())};
      for (std::size_t k = 0; k < f.grad.size(); ++k) f.grad[k] = t.mono.exps[k];
      forms.push_back(std::move(f));
    }
    return TropicalPolynomial(p.vars(), std::move(forms));
  }

  const VarTablePtr& vars() const noexcept { return vars_; }
  const std::vector<AffineForm>& forms() const noexcept { return forms_; }

  long evaluate(std::span<const long> xi) const {
    if (xi.size() != vars_->size()) throw StructuralError("TropicalPolynomial: point has wrong arity");
    long best = forms_.front().evaluate(xi);
    for (std::size_t k = 1; k < forms_.size(); ++k) best = std::max(best, forms_[k].evaluate(xi));
    return best;
  }

  /// Tropical sum: max of both, i.e. the union of forms.
  friend TropicalPolynomial tropical_sum(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    require_same_table(a.vars_, b.vars_, "tropical_sum");
    std::vector<AffineForm> f = a.forms_;
    f.insert(f.end(), b.forms_.begin(), b.forms_.end());
    return TropicalPolynomial(a.vars_, std::move(f));
  }

  /// Tropical product: pointwise sum, i.e. the Minkowski sum of forms.
  friend TropicalPolynomial tropical_product(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    require_same_table(a.vars_, b.vars_, "tropical_product");
    std::vector<AffineForm> f;
    f.reserve(a.forms_.size() * b.forms_.size());
    for (const auto& u : a.forms_) {
      for (const auto& v : b.forms_) {
        AffineForm w{u.constant + v.constant, u.grad};
        for (std::size_t k = 0; k < w.grad.size(); ++k) w.grad[k] += v.grad[k];
        f.push_back(std::move(w));
      }
    }
    return TropicalPolynomial(a.vars_, std::move(f));
  }

  friend bool operator==(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    return same_table(a.vars_, b.vars_) && a.forms_ == b.forms_;
  }

  Json to_json() const {
    Json out = Json::array();
    for (const auto& f : forms_) out.push_back(Json{{"const", f.constant}, {"grad", f.grad}});
    return out;
  }

 private:
  VarTablePtr vars_;
  std::vector<AffineForm> forms_;
};

/// One output coordinate: num - den.
struct TropicalQuotient {
  TropicalPolynomial num;
  TropicalPolynomial den;

  long evaluate(std::span<const long> xi) const { return num.evaluate(xi) - den.evaluate(xi); }
  Json to_json() const { return Json{{"num", num.to_json()}, {"den", den.to_json()}}; }
};

/// Requires a verified subtraction-free representation. The numerator and
/// denominator are the expanded normal form with negative monomial
/// exponents moved to the denominator.
inline TropicalQuotient tropicalize(const RationalFunction& f) {
  if (f.positivity() != Positivity::verified_positive) {
    throw NotPositiveError("tropicalize: no subtraction-free representation verified");
  }
  Monomial lift;
  for (std::size_t k = 0; k < kMaxVars; ++k) lift.exps[k] = static_cast<std::int16_t>(std::max(0, -int{f.monomial_part().exps[k]}));
  return {TropicalPolynomial::of(f.num().shifted(lift)), TropicalPolynomial::of(f.den().shifted(lift))};
}

struct PiecewiseLinearMap {
  VarTablePtr vars;
  std::vector<std::pair<std::string, TropicalQuotient>> coordinates;

  std::vector<long> evaluate(std::span<const long> xi) const {
    std::vector<long> out;
    out.reserve(coordinates.size());
    for (const auto& [name, q] : coordinates) out.push_back(q.evaluate(xi));
    return out;
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& [name, q] : coordinates) {
      Json j = q.to_json();
      cs.push_back(Json{{"name", name}, {"num", j["num"]}, {"den", j["den"]}});
    }
    return Json{{"vars", vars->names()}, {"coordinates", std::move(cs)}};
  }
};

inline PiecewiseLinearMap tropicalize_named(const std::vector<std::pair<std::string, RationalFunction>>& fs) {
  if (fs.empty()) throw StructuralError("tropicalize: nothing to tropicalize");
  PiecewiseLinearMap m{fs.front().second.vars(), {}};
  for (const auto& [name, f] : fs) {
    require_same_table(m.vars, f.vars(), "tropicalize");
    m.coordinates.emplace_back(name, tropicalize(f));
  }
  return m;
}

/// Valuation of f along x_k -> t^{xi_k}: deg_t(num) - deg_t(den) of the
/// substituted univariate quotient. Computed by substitution through the
/// factored form, independently of the expanded numerator.
inline long valuation_oracle(const RationalFunction& f, std::span<const long> xi) {
  const auto& src = *f.vars();
  if (xi.size() != src.size()) throw StructuralError("valuation_oracle: point has wrong arity");
  static const VarTablePtr t_table = make_var_table({"t"});
  Substitution s;
  for (std::size_t k = 0; k < src.size(); ++k) {
    Monomial m;
    m.exps[0] = static_cast<std::int16_t>(xi[k]);
    s.emplace(src.name(k), RationalFunction::monomial(t_table, BigRational(1), m));
  }
  RationalFunction u = RationalFunction::constant(t_table, BigRational(0));
  try {
    u = rf_substitute(f, s);
  } catch (const DomainError& e) {
    throw UndefinedValuation(std::string("valuation_oracle: ") + e.what());
  }
  if (u.is_zero()) throw UndefinedValuation("valuation_oracle: numerator vanishes after substitution");
  return long{u.num().max_exponents().exps[0]} - long{u.den().max_exponents().exps[0]};
}

// ---------------------------------------------------------------- targets

struct TropTarget {
  std::string name;
  RationalFunction f;
};

/// gamma_i, eps_i and the six coordinates of e_i^c, i = 0, 1, 2, over the
/// x table (c is the parameter slot).
inline std::vector<TropTarget> trop_targets() {
  std::vector<TropTarget> out;
  const auto xs = x_symbols();
  for (std::size_t i = 0; i < kRank; ++i) out.push_back({"gamma" + std::to_string(i), formulas::gamma(i, xs)});
  for (std::size_t i = 0; i < kRank; ++i) out.push_back({"eps" + std::to_string(i), formulas::eps(i, xs)});
  for (std::size_t i = 0; i < kRank; ++i) {
    const auto e = act_symbolic(i);
    for (std::size_t k = 0; k < 6; ++k) out.push_back({"e" + std::to_string(i) + "_x" + std::to_string(k), e[k]});
  }
  return out;
}

// ---------------------------------------------------------------- UD crystal

/// Cocharacter on the x chart.
using Cochar = std::array<long, 6>;

/// Piecewise-linear operators, weights and eps on Z^6, tropicalized once.
class UDCrystal {
 public:
  static const UDCrystal& instance() {
    static const UDCrystal c;
    return c;
  }

  /// UD(e_i^c) with c -> t^n.
  Cochar op(std::size_t i, long n, const Cochar& xi) const {
    const auto p = with_param(xi, n);
    Cochar out;
    for (std::size_t k = 0; k < 6; ++k) out[k] = ops_.at(i).at(k).evaluate(p);
    return out;
  }
  Cochar e(std::size_t i, const Cochar& xi) const { return op(i, 1, xi); }
  Cochar f(std::size_t i, const Cochar& xi) const { return op(i, -1, xi); }

  long wt(std::size_t j, const Cochar& xi) const { return wt_.at(j).evaluate(with_param(xi, 0)); }
  long eps(std::size_t i, const Cochar& xi) const { return eps_.at(i).evaluate(with_param(xi, 0)); }
  long phi(std::size_t i, const Cochar& xi) const { return eps(i, xi) + wt(i, xi); }

 private:
  UDCrystal() {
    const auto xs = x_symbols();
    for (std::size_t i = 0; i < kRank; ++i) {
      wt_.push_back(tropicalize(formulas::gamma(i, xs)));
      eps_.push_back(tropicalize(formulas::eps(i, xs)));
      std::vector<TropicalQuotient> coords;
      for (const auto& c : act_symbolic(i)) coords.push_back(tropicalize(c));
      ops_.push_back(std::move(coords));
    }
  }

  static std::array<long, 7> with_param(const Cochar& xi, long n) {
    return {xi[0], xi[1], xi[2], xi[3], xi[4], xi[5], n};
  }

  std::vector<TropicalQuotient> wt_, eps_;
  std::vector<std::vector<TropicalQuotient>> ops_;
};

namespace detail {

inline std::string cochar_str(const Cochar& xi) {
  std::string s;
  for (std::size_t k = 0; k < 6; ++k) s += (k ? "," : "") + std::to_string(xi[k]);
  return s;
}

inline Json cochar_json(const Cochar& xi) { return Json(std::vector<long>(xi.begin(), xi.end())); }

}  // namespace detail

/// Tropical evaluation against the valuation oracle on all 24 targets at
/// random xi in [-5,5]^6, n in [-3,3].
inline VerificationReport check_trop_vs_oracle(const Config& cfg) {
  const std::size_t n = detail::at_least(cfg, 100);
  VerificationReport r("trop.oracle", Mode::sampled, n, cfg.seed);
  const auto targets = trop_targets();
  std::vector<TropicalQuotient> trops;
  for (const auto& t : targets) trops.push_back(tropicalize(t.f));
  const PointSampler sampler(cfg.seed, r.identity(), cfg.coeff_bound);
  run_samples(r, cfg, n, [&](std::size_t k) {
    std::vector<Counterexample> bad;
    auto g = sampler.engine(k);
    std::array<long, 7> xi{};
    for (std::size_t d = 0; d < 6; ++d) xi[d] = PointSampler::integer_in(g, -5, 5);
    xi[6] = PointSampler::integer_in(g, -3, 3);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const long lhs = trops[t].evaluate(xi);
      const long rhs = valuation_oracle(targets[t].f, xi);
      if (lhs != rhs) {
        bad.push_back({Json{{"target", targets[t].name}, {"xi", std::vector<long>(xi.begin(), xi.end())}},
                       std::to_string(lhs), std::to_string(rhs)});
      }
    }
    return bad;
  });
  Json names = Json::array();
  for (const auto& t : targets) names.push_back(t.name);
  r.details()["targets"] = std::move(names);
  r.details()["xi_range"] = "[-5,5]^6";
  r.details()["n_range"] = "[-3,3]";
  return r;
}

/// trop(p q) is the Minkowski sum and trop(p + q) the union of the form sets,
/// compared as sets for positive polynomials (no cancellation can occur).
inline VerificationReport check_max_plus_laws(const Config& cfg) {
  const std::size_t n = detail::at_least(cfg, 100);
  VerificationReport r("trop.max_plus_laws", Mode::sampled, n, cfg.seed);
  const auto targets = trop_targets();
  std::vector<LaurentPolynomial> polys;
  for (const auto& t : targets) {
    polys.push_back(t.f.num());
    if (!t.f.den().is_constant()) polys.push_back(t.f.den());
  }
  const PointSampler sampler(cfg.seed, r.identity(), cfg.coeff_bound);
  run_samples(r, cfg, n, [&](std::size_t k) {
    std::vector<Counterexample> bad;
    auto g = sampler.engine(k);
    const auto& p = polys[g() % polys.size()];
    const auto& q = polys[g() % polys.size()];
    const auto tp = TropicalPolynomial::of(p), tq = TropicalPolynomial::of(q);
    if (TropicalPolynomial::of(p * q) != tropical_product(tp, tq)) {
      bad.push_back({Json{{"sample", k}}, "trop(p*q)", "trop(p)+trop(q)"});
    }
    if (TropicalPolynomial::of(p + q) != tropical_sum(tp, tq)) {
      bad.push_back({Json{{"sample", k}}, "trop(p+q)", "max(trop(p),trop(q))"});
    }
    return bad;
  });
  return r;
}

/// Fixed values: gamma2 and eps2 shapes, e2 at the origin, n = 0.
inline VerificationReport check_trop_examples() {
  VerificationReport r("trop.examples", Mode::symbolic, 1, 0);
  const auto& ud = UDCrystal::instance();
  const Cochar o{};
  const auto xs = x_symbols();
  const auto g2 = tropicalize(formulas::gamma(2, xs));
  const std::vector<long> g2_grad = {0, -1, 2, -1, 2, -1, 0};
  if (g2.num.forms().size() != 1 || g2.num.forms()[0].grad != std::vector<long>{0, 0, 2, 0, 2, 0, 0} ||
      g2.den.forms()[0].grad != std::vector<long>{0, 1, 0, 1, 0, 1, 0}) {
    r.fail({Json("gamma2"), g2.to_json().dump(), "2xi2+2xi4-xi1-xi3-xi5"});
  }
  const Cochar probe{3, -1, 4, 1, -5, 9};
  long lin = 0;
  for (std::size_t k = 0; k < 6; ++k) lin += g2_grad[k] * probe[k];
  if (ud.wt(2, probe) != lin) r.fail({Json("wt2 at (3,-1,4,1,-5,9)"), std::to_string(ud.wt(2, probe)), std::to_string(lin)});
  const auto e2 = tropicalize(formulas::eps(2, xs));
  const long expect = std::max(probe[1] - probe[2], probe[1] + probe[3] - 2 * probe[2] - probe[4]);
  if (ud.eps(2, probe) != expect || e2.num.forms().size() != 2) {
    r.fail({Json("eps2 at (3,-1,4,1,-5,9)"), std::to_string(ud.eps(2, probe)), std::to_string(expect)});
  }
  if (ud.e(2, o)[2] != 1) r.fail({Json("e2 at 0, coordinate 2"), std::to_string(ud.e(2, o)[2]), "1"});
  if (ud.wt(2, o) != 0) r.fail({Json("wt2 at 0"), std::to_string(ud.wt(2, o)), "0"});
  for (std::size_t i = 0; i < kRank; ++i) {
    if (ud.op(i, 0, probe) != probe) r.fail({Json("n = 0, i = " + std::to_string(i)), detail::cochar_str(ud.op(i, 0, probe)), detail::cochar_str(probe)});
  }
  const auto one = tropicalize(RationalFunction::constant(x_table(), BigRational(1)));
  if (one.evaluate(std::array<long, 7>{1, 2, 3, 4, 5, 6, 7}) != 0) r.fail({Json("constant 1"), "nonzero", "0"});
  return r;
}

/// (a) Z-action, (b) weight shift by the resolved Cartan exponent, (c) eps
/// decrement, (d) phi = eps + wt, (e) e_i f_i = id, at random xi in
/// [-10,10]^6 and n, m in [-5,5].
inline VerificationReport check_ud_crystal_axioms(const Config& cfg, AxiomConvention conv) {
  const std::size_t n = detail::at_least(cfg, 1000);
  VerificationReport r("udcrystal.axioms", Mode::sampled, n, cfg.seed);
  const auto& ud = UDCrystal::instance();
  const PointSampler sampler(cfg.seed, r.identity(), cfg.coeff_bound);
  run_samples(r, cfg, n, [&](std::size_t k) {
    std::vector<Counterexample> bad;
    auto g = sampler.engine(k);
    Cochar xi;
    for (auto& v : xi) v = PointSampler::integer_in(g, -10, 10);
    const long a = PointSampler::integer_in(g, -5, 5), b = PointSampler::integer_in(g, -5, 5);
    auto fail = [&](const std::string& what, const std::string& l, const std::string& rr) {
      bad.push_back({Json{{"xi", detail::cochar_json(xi)}, {"n", a}, {"m", b}, {"property", what}}, l, rr});
    };
    for (std::size_t i = 0; i < kRank; ++i) {
      const std::string si = std::to_string(i);
      const Cochar ab = ud.op(i, b, ud.op(i, a, xi)), sum = ud.op(i, a + b, xi);
      if (ab != sum) fail("(a) i=" + si, detail::cochar_str(ab), detail::cochar_str(sum));
      const Cochar up = ud.e(i, xi);
      for (std::size_t j = 0; j < kRank; ++j) {
        const long lhs = ud.wt(j, up), rhs = ud.wt(j, xi) + axiom_exponent(conv, i, j);
        if (lhs != rhs) fail("(b) i=" + si + " j=" + std::to_string(j), std::to_string(lhs), std::to_string(rhs));
        const long shifted = ud.wt(j, ud.op(i, a, xi)), expect = ud.wt(j, xi) + a * axiom_exponent(conv, i, j);
        if (shifted != expect) fail("(b) n-fold i=" + si + " j=" + std::to_string(j), std::to_string(shifted), std::to_string(expect));
      }
      if (ud.eps(i, up) != ud.eps(i, xi) - 1) {
        fail("(c) i=" + si, std::to_string(ud.eps(i, up)), std::to_string(ud.eps(i, xi) - 1));
      }
      if (ud.phi(i, xi) - ud.eps(i, xi) != ud.wt(i, xi)) fail("(d) i=" + si, std::to_string(ud.phi(i, xi)), "eps + wt");
      const Cochar back = ud.e(i, ud.f(i, xi));
      if (back != xi) fail("(e) i=" + si, detail::cochar_str(back), detail::cochar_str(xi));
    }
    return bad;
  });
  r.details()["xi_range"] = "[-10,10]^6";
  r.details()["n_range"] = "[-5,5]";
  r.details()["convention"] = std::string(to_string(conv));
  return r;
}

/// phi_i = eps_i + wt_i by definition; compare with UD(eps_i * gamma_i).
inline VerificationReport check_ud_phi_geometric(const Config& cfg) {
  const std::size_t n = detail::at_least(cfg, 100);
  VerificationReport r("udcrystal.phi", Mode::sampled, n, cfg.seed);
  const auto xs = x_symbols();
  std::vector<TropicalQuotient> phi;
  for (std::size_t i = 0; i < kRank; ++i) phi.push_back(tropicalize(formulas::eps(i, xs) * formulas::gamma(i, xs)));
  const auto& ud = UDCrystal::instance();
  const PointSampler sampler(cfg.seed, r.identity(), cfg.coeff_bound);
  run_samples(r, cfg, n, [&](std::size_t k) {
    std::vector<Counterexample> bad;
    auto g = sampler.engine(k);
    Cochar xi;
    for (auto& v : xi) v = PointSampler::integer_in(g, -10, 10);
    const std::array<long, 7> p{xi[0], xi[1], xi[2], xi[3], xi[4], xi[5], 0};
    for (std::size_t i = 0; i < kRank; ++i) {
      if (phi[i].evaluate(p) != ud.phi(i, xi)) {
        bad.push_back({Json{{"xi", detail::cochar_json(xi)}, {"i", i}}, std::to_string(phi[i].evaluate(p)),
                       std::to_string(ud.phi(i, xi))});
      }
    }
    return bad;
  });
  return r;
}

inline Reports suite_trop(const Config& cfg) {
  return {check_trop_examples(), check_trop_vs_oracle(cfg), check_max_plus_laws(cfg)};
}

inline Reports suite_udcrystal(const Config& cfg) {
  return {check_ud_crystal_axioms(cfg, resolved_convention(cfg)), check_ud_phi_geometric(cfg)};
}

// ---------------------------------------------------------------- graph

struct CrystalEdge {
  Cochar from;
  Cochar to;  // to = f_i(from)
  std::size_t color;
  bool eps_consistent;  // eps_i(from) = eps_i(to) - 1

  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
  Cochar seed;
  int radius;
  std::vector<Cochar> nodes;  // breadth-first, lexicographic within a layer
  std::vector<int> depth;
  std::vector<CrystalEdge> edges;

  bool consistent() const {
    return std::all_of(edges.begin(), edges.end(), [](const CrystalEdge& e) { return e.eps_consistent; });
  }

  Json to_json() const {
    Json ns = Json::array(), es = Json::array();
    for (std::size_t k = 0; k < nodes.size(); ++k) ns.push_back(Json{{"xi", detail::cochar_json(nodes[k])}, {"depth", depth[k]}});
    for (const auto& e : edges) {
      es.push_back(Json{{"from", detail::cochar_json(e.from)}, {"to", detail::cochar_json(e.to)}, {"color", e.color},
                        {"eps_consistent", e.eps_consistent}});
    }
    return Json{{"seed", detail::cochar_json(seed)}, {"radius", radius}, {"nodes", std::move(ns)},
                {"edges", std::move(es)}, {"eps_consistent", consistent()}};
  }

  std::string to_dot() const {
    std::map<Cochar, std::size_t> id;
    std::ostringstream os;
    os << "digraph ud_crystal {\n";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      id[nodes[k]] = k;
      os << "  n" << k << " [label=\"(" << detail::cochar_str(nodes[k]) << ")\"];\n";
    }
    for (const auto& e : edges) {
      os << "  n" << id.at(e.from) << " -> n" << id.at(e.to) << " [label=\"" << e.color << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }
};

/// Points within `radius` steps of e_i, f_i from the seed. Each expanded
/// node contributes the edges to f_i(u) and from e_i(u).
inline CrystalGraph explore_crystal_graph(const Cochar& seed, int radius, const Config& cfg = {}) {
  if (radius < 0) throw std::invalid_argument("explore: radius must be nonnegative");
  const auto& ud = UDCrystal::instance();
  CrystalGraph g{seed, radius, {seed}, {0}, {}};
  std::set<Cochar> seen = {seed};
  std::set<CrystalEdge> edges;
  std::vector<Cochar> layer = {seed};
  struct Expansion {
    std::vector<CrystalEdge> edges;
  };
  for (int d = 0; d < radius && !layer.empty(); ++d) {
    const auto out = parallel_map<Expansion>(cfg, layer.size(), [&](std::size_t k) {
      Expansion ex;
      const Cochar& u = layer[k];
      for (std::size_t i = 0; i < kRank; ++i) {
        const Cochar down = ud.f(i, u), up = ud.e(i, u);
        ex.edges.push_back({u, down, i, ud.eps(i, u) == ud.eps(i, down) - 1});
        ex.edges.push_back({up, u, i, ud.eps(i, up) == ud.eps(i, u) - 1});
      }
      return ex;
    });
    std::set<Cochar> next;
    for (const auto& ex : out) {
      for (const auto& e : ex.edges) {
        edges.insert(e);
        for (const Cochar& v : {e.from, e.to}) {
          if (!seen.count(v)) next.insert(v);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& v : layer) {
      seen.insert(v);
      g.nodes.push_back(v);
      g.depth.push_back(d + 1);
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

}  // namespace g2crystal
