#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "g2crystal/laurent_polynomial.hpp"

namespace g2crystal {

enum class Positivity { verified_positive, not_verified };

/// Assignment of exact values to named variables.
using RationalPoint = std::map<std::string, BigRational>;

inline std::string format_point(const VarTable& vars, std::span<const BigRational> values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ", ";
    os << vars.name(i) << '=' << (i < values.size() ? values[i].str() : "?");
  }
  os << '}';
  return os.str();
}

/// A polynomial factor with min exponent zero in every variable, grlex
/// leading coefficient 1 and at least two terms.
struct Factor {
  std::shared_ptr<const LaurentPolynomial> poly;
  std::size_t hash = 0;
  int exp = 0;
};

namespace detail {

inline std::strong_ordering factor_order(const Factor& a, const Factor& b) {
  if (a.hash != b.hash) return a.hash <=> b.hash;
  if (a.poly == b.poly) return std::strong_ordering::equal;
  return structural_compare(*a.poly, *b.poly);
}

}  // namespace detail

/// Quotient of Laurent polynomials kept as scalar * monomial * prod p_k^{e_k}
/// over normalized polynomial factors p_k with nonzero integer e_k.
///
/// Products and quotients merge factor lists, so identical factors cancel
/// without expansion; sums pull out the shared part and expand the rest
/// into a new factor. No polynomial gcd is taken, so distinct factors may
/// still share a divisor and two equal functions may be stored
/// differently; `rf_equal` decides equality exactly.
///
/// num()/den() give the expanded normal form: den is the product of the
/// negative-power factors (min exponent zero, leading coefficient 1) and
/// num carries the scalar, the monomial and the positive-power factors. The
/// zero function is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(const LaurentPolynomial& num) : RationalFunction(from_poly(num)) {}

  RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    require_same_table(num.vars(), den.vars(), "RationalFunction");
    if (den.is_zero()) throw DomainError("RationalFunction: zero denominator");
    *this = from_poly(num) * from_poly(den).inverse();
  }

  static RationalFunction constant(const VarTablePtr& vars, const BigRational& c) {
    return RationalFunction(vars, c, Monomial{}, {});
  }
  static RationalFunction variable(const VarTablePtr& vars, std::string_view name) {
    Monomial m;
    m.exps[vars->require(name)] = 1;
    return RationalFunction(vars, BigRational(1), m, {});
  }
  static RationalFunction monomial(const VarTablePtr& vars, const BigRational& c, const Monomial& m) {
    if (c.is_zero()) return constant(vars, c);
    return RationalFunction(vars, c, m, {});
  }

  const VarTablePtr& vars() const noexcept { return vars_; }
  bool is_zero() const noexcept { return scalar_.is_zero(); }
  const BigRational& scalar() const noexcept { return scalar_; }
  const Monomial& monomial_part() const noexcept { return mono_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  const LaurentPolynomial& num() const { return expanded().num; }
  const LaurentPolynomial& den() const { return expanded().den; }

  /// verified_positive iff the expanded num and den have only positive
  /// coefficients. Positive factors with a positive scalar settle it
  /// without expanding.
  Positivity positivity() const {
    if (is_zero()) return Positivity::not_verified;
    const bool factors_positive = scalar_.sign() > 0 && std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) {
                                    return f.poly->all_coefficients_positive();
                                  });
    if (factors_positive) return Positivity::verified_positive;
    return num().all_coefficients_positive() && den().all_coefficients_positive() ? Positivity::verified_positive
                                                                                  : Positivity::not_verified;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DomainError("RationalFunction: division by the zero function");
    std::vector<Factor> fs = factors_;
    for (auto& f : fs) f.exp = -f.exp;
    return RationalFunction(vars_, BigRational(1) / scalar_, mono_.inverse(), std::move(fs));
  }

  RationalFunction powered(int e) const {
    if (e == 0) return constant(vars_, BigRational(1));
    if (e < 0) return inverse().powered(-e);
    if (is_zero()) return *this;
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const long v = long{mono_.exps[i]} * e;
      if (v > 32767 || v < -32768) throw DomainError("RationalFunction: exponent overflow");
      m.exps[i] = static_cast<std::int16_t>(v);
    }
    std::vector<Factor> fs = factors_;
    for (auto& f : fs) f.exp *= e;
    return RationalFunction(vars_, g2crystal::pow(scalar_, e), m, std::move(fs));
  }

  RationalFunction operator-() const { return scaled(BigRational(-1)); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, false); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, true); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    require_same_table(a.vars_, b.vars_, "rf mul");
    if (a.is_zero() || b.is_zero()) return constant(a.vars_, BigRational(0));
    return RationalFunction(a.vars_, a.scalar_ * b.scalar_, a.mono_ * b.mono_, merge(a.factors_, b.factors_, 1));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    require_same_table(a.vars_, b.vars_, "rf div");
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction scaled(const BigRational& k) const {
    if (k.is_zero() || is_zero()) return constant(vars_, BigRational(0));
    return RationalFunction(vars_, scalar_ * k, mono_, factors_);
  }

  // Mixed arithmetic with scalars: the scalar lives over the same table.
  friend RationalFunction operator+(const RationalFunction& a, const BigRational& k) { return a + constant(a.vars(), k); }
  friend RationalFunction operator+(const BigRational& k, const RationalFunction& a) { return a + k; }
  friend RationalFunction operator-(const RationalFunction& a, const BigRational& k) { return a - constant(a.vars(), k); }
  friend RationalFunction operator-(const BigRational& k, const RationalFunction& a) { return constant(a.vars(), k) - a; }
  friend RationalFunction operator*(const RationalFunction& a, const BigRational& k) { return a.scaled(k); }
  friend RationalFunction operator*(const BigRational& k, const RationalFunction& a) { return a.scaled(k); }
  friend RationalFunction operator/(const RationalFunction& a, const BigRational& k) {
    if (k.is_zero()) throw DomainError("RationalFunction: division by zero scalar");
    return a.scaled(BigRational(1) / k);
  }
  friend RationalFunction operator/(const BigRational& k, const RationalFunction& a) { return a.inverse().scaled(k); }
  friend RationalFunction operator+(const RationalFunction& a, long k) { return a + BigRational(k); }
  friend RationalFunction operator+(long k, const RationalFunction& a) { return a + BigRational(k); }
  friend RationalFunction operator-(const RationalFunction& a, long k) { return a - BigRational(k); }
  friend RationalFunction operator-(long k, const RationalFunction& a) { return BigRational(k) - a; }
  friend RationalFunction operator*(const RationalFunction& a, long k) { return a.scaled(BigRational(k)); }
  friend RationalFunction operator*(long k, const RationalFunction& a) { return a.scaled(BigRational(k)); }
  friend RationalFunction operator/(const RationalFunction& a, long k) { return a / BigRational(k); }
  friend RationalFunction operator/(long k, const RationalFunction& a) { return BigRational(k) / a; }

  /// Exact value at a positional point. Throws EvaluationError when a
  /// denominator factor vanishes or a zero value carries a negative exponent.
  BigRational evaluate(std::span<const BigRational> values) const {
    if (values.size() != vars_->size()) throw StructuralError("rf_eval: point has wrong arity");
    try {
      if (is_zero()) return BigRational(0);
      BigRational v = scalar_;
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (mono_.exps[i] != 0) {
          if (mono_.exps[i] < 0 && values[i].is_zero()) throw DomainError("denominator vanishes");
          v *= g2crystal::pow(values[i], mono_.exps[i]);
        }
      }
      for (const auto& f : factors_) {
        const BigRational p = f.poly->evaluate(values);
        if (p.is_zero() && f.exp < 0) throw DomainError("denominator vanishes");
        v *= g2crystal::pow(p, f.exp);
      }
      return v;
    } catch (const EvaluationError&) {
      throw;
    } catch (const DomainError& e) {
      throw EvaluationError(std::string("rf_eval: ") + e.what(), format_point(*vars_, values));
    }
  }

  BigRational evaluate(const RationalPoint& point) const {
    const auto& t = *vars_;
    std::vector<BigRational> values(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto it = point.find(t.name(i));
      if (it != point.end()) {
        values[i] = it->second;
      } else if (occurs(i)) {
        throw StructuralError("rf_eval: point does not assign '" + t.name(i) + "'");
      }
    }
    return evaluate(values);
  }

  /// True iff variable slot `i` has a nonzero exponent somewhere.
  bool occurs(std::size_t i) const {
    if (mono_.exps[i] != 0) return true;
    for (const auto& f : factors_) {
      for (const auto& t : f.poly->terms()) {
        if (t.mono.exps[i] != 0) return true;
      }
    }
    return false;
  }

  /// Number of terms in the expanded num and den, computed from the factor
  /// sizes without expanding (an upper bound).
  double size_bound() const {
    double n = 1, d = 1;
    for (const auto& f : factors_) {
      const double s = std::pow(static_cast<double>(f.poly->size()), std::abs(f.exp));
      (f.exp > 0 ? n : d) *= s;
    }
    return n + d;
  }

  /// Total-degree bounds of the expanded num and den once the monomial
  /// part is cleared.
  int num_degree() const {
    int d = 0;
    for (const auto& f : factors_) {
      if (f.exp > 0) d += f.exp * f.poly->cleared_total_degree();
    }
    return d;
  }
  int den_degree() const {
    int d = 0;
    for (const auto& f : factors_) {
      if (f.exp < 0) d -= f.exp * f.poly->cleared_total_degree();
    }
    return d;
  }

  /// Upper bound on the number of term products formed when a - b is
  /// expanded after the shared factors are divided out.
  static double difference_cost(const RationalFunction& a, const RationalFunction& b) {
    double ca = 1, cb = 1;
    std::size_t i = 0, j = 0;
    auto sz = [](const Factor& f, int e) { return std::pow(static_cast<double>(f.poly->size()), e); };
    while (i < a.factors_.size() || j < b.factors_.size()) {
      if (j == b.factors_.size() || (i < a.factors_.size() && detail::factor_order(a.factors_[i], b.factors_[j]) < 0)) {
        const Factor& f = a.factors_[i++];
        (f.exp > 0 ? ca : cb) *= sz(f, std::abs(f.exp));
      } else if (i == a.factors_.size() || detail::factor_order(a.factors_[i], b.factors_[j]) > 0) {
        const Factor& f = b.factors_[j++];
        (f.exp > 0 ? cb : ca) *= sz(f, std::abs(f.exp));
      } else {
        const Factor& fa = a.factors_[i++];
        const Factor& fb = b.factors_[j++];
        const int m = std::min(fa.exp, fb.exp);
        ca *= sz(fa, fa.exp - m);
        cb *= sz(fb, fb.exp - m);
      }
    }
    return ca + cb;
  }

  /// Structural identity of the stored factorizations (stronger than rf_equal).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (!same_table(a.vars_, b.vars_) || !(a.scalar_ == b.scalar_) || !(a.mono_ == b.mono_) ||
        a.factors_.size() != b.factors_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
      if (a.factors_[i].exp != b.factors_[i].exp || detail::factor_order(a.factors_[i], b.factors_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  struct Expansion {
    std::once_flag once;
    std::optional<LaurentPolynomial> num;
    std::optional<LaurentPolynomial> den;
  };

  struct Expanded {
    const LaurentPolynomial& num;
    const LaurentPolynomial& den;
  };

  RationalFunction(VarTablePtr vars, BigRational scalar, Monomial mono, std::vector<Factor> factors)
      : vars_(std::move(vars)),
        scalar_(std::move(scalar)),
        mono_(mono),
        factors_(std::move(factors)),
        cache_(std::make_shared<Expansion>()) {
    if (scalar_.is_zero()) {
      mono_ = Monomial{};
      factors_.clear();
    }
  }

  Expanded expanded() const {
    std::call_once(cache_->once, [this] {
      LaurentPolynomial n = LaurentPolynomial::monomial(vars_, scalar_, mono_);
      LaurentPolynomial d = LaurentPolynomial::constant(vars_, BigRational(1));
      for (const auto& f : factors_) {
        if (f.exp > 0) {
          n = n * f.poly->pow(static_cast<unsigned>(f.exp));
        } else {
          d = d * f.poly->pow(static_cast<unsigned>(-f.exp));
        }
      }
      cache_->num.emplace(std::move(n));
      cache_->den.emplace(std::move(d));
    });
    return {*cache_->num, *cache_->den};
  }

  /// p = k * m * q with q normalized (or q absent when p is a single term).
  static RationalFunction from_poly(const LaurentPolynomial& p) {
    const auto& vars = p.vars();
    if (p.is_zero()) return constant(vars, BigRational(0));
    if (p.is_monomial()) return RationalFunction(vars, p.terms()[0].coef, p.terms()[0].mono, {});
    const Monomial m = p.min_exponents();
    const BigRational k = p.leading_term().coef;
    auto q = std::make_shared<const LaurentPolynomial>(p.shifted(m.inverse()).scaled(BigRational(1) / k));
    const std::size_t h = q->hash();
    return RationalFunction(vars, k, m, {Factor{std::move(q), h, 1}});
  }

  // Sorted merge of factor lists with exponents a + sign * b.
  static std::vector<Factor> merge(const std::vector<Factor>& a, const std::vector<Factor>& b, int sign) {
    std::vector<Factor> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && detail::factor_order(a[i], b[j]) < 0)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || detail::factor_order(a[i], b[j]) > 0) {
        Factor f = b[j++];
        f.exp *= sign;
        out.push_back(std::move(f));
      } else {
        Factor f = a[i];
        f.exp += sign * b[j].exp;
        if (f.exp != 0) out.push_back(std::move(f));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    require_same_table(a.vars_, b.vars_, subtract ? "rf sub" : "rf add");
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    // Shared part g: componentwise minimum of monomial and factor exponents.
    Monomial gm;
    for (std::size_t i = 0; i < kMaxVars; ++i) gm.exps[i] = std::min(a.mono_.exps[i], b.mono_.exps[i]);
    std::vector<Factor> shared;
    LaurentPolynomial pa = LaurentPolynomial::monomial(a.vars_, a.scalar_, a.mono_ * gm.inverse());
    LaurentPolynomial pb = LaurentPolynomial::monomial(a.vars_, subtract ? -b.scalar_ : b.scalar_, b.mono_ * gm.inverse());
    std::size_t i = 0, j = 0;
    auto take = [&shared](const Factor& f, int e) {
      if (e != 0) shared.push_back(Factor{f.poly, f.hash, e});
    };
    while (i < a.factors_.size() || j < b.factors_.size()) {
      if (j == b.factors_.size() || (i < a.factors_.size() && detail::factor_order(a.factors_[i], b.factors_[j]) < 0)) {
        const Factor& f = a.factors_[i++];
        const int m = std::min(f.exp, 0);
        take(f, m);
        if (f.exp - m > 0) pa = pa * f.poly->pow(static_cast<unsigned>(f.exp - m));
        if (-m > 0) pb = pb * f.poly->pow(static_cast<unsigned>(-m));
      } else if (i == a.factors_.size() || detail::factor_order(a.factors_[i], b.factors_[j]) > 0) {
        const Factor& f = b.factors_[j++];
        const int m = std::min(f.exp, 0);
        take(f, m);
        if (f.exp - m > 0) pb = pb * f.poly->pow(static_cast<unsigned>(f.exp - m));
        if (-m > 0) pa = pa * f.poly->pow(static_cast<unsigned>(-m));
      } else {
        const Factor& fa = a.factors_[i++];
        const Factor& fb = b.factors_[j++];
        const int m = std::min(fa.exp, fb.exp);
        take(fa, m);
        if (fa.exp - m > 0) pa = pa * fa.poly->pow(static_cast<unsigned>(fa.exp - m));
        if (fb.exp - m > 0) pb = pb * fb.poly->pow(static_cast<unsigned>(fb.exp - m));
      }
    }
    const LaurentPolynomial sum = pa + pb;
    if (sum.is_zero()) return constant(a.vars_, BigRational(0));
    const RationalFunction g(a.vars_, BigRational(1), gm, std::move(shared));
    return g * from_poly(sum);
  }

  VarTablePtr vars_;
  BigRational scalar_;
  Monomial mono_;
  std::vector<Factor> factors_;
  std::shared_ptr<Expansion> cache_;
};

inline RationalFunction pow(const RationalFunction& f, int e) { return f.powered(e); }

/// Exact decision: a - b is the zero function (the shared factors are
/// divided out first, the rest is compared after cross multiplication).
inline bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  require_same_table(a.vars(), b.vars(), "rf_equal");
  if (a == b) return true;
  return (a - b).is_zero();
}

inline Positivity rf_is_positive(const RationalFunction& f) { return f.positivity(); }

inline BigRational rf_eval(const RationalFunction& f, const RationalPoint& p) { return f.evaluate(p); }

/// Variable name -> replacement; every replacement lives over one table.
using Substitution = std::map<std::string, RationalFunction>;

namespace detail {

inline const RationalFunction& replacement(const Substitution& subst, const VarTable& src, std::size_t k) {
  auto it = subst.find(src.name(k));
  if (it == subst.end()) throw StructuralError("rf_substitute: no replacement for '" + src.name(k) + "'");
  return it->second;
}

// Product of replacement powers for a single Laurent monomial.
inline RationalFunction substitute_monomial(const BigRational& coef, const Monomial& m, const VarTable& src,
                                            const Substitution& subst, const VarTablePtr& target) {
  RationalFunction acc = RationalFunction::constant(target, coef);
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (m.exps[k] == 0) continue;
    const RationalFunction& v = replacement(subst, src, k);
    if (m.exps[k] < 0 && v.is_zero()) {
      throw DomainError("rf_substitute: '" + src.name(k) + "' -> 0 under a negative power");
    }
    acc = acc * pow(v, m.exps[k]);
  }
  return acc;
}

// p(n_k / d_k) written as N / D, with D = prod n_k^{-lo_k} d_k^{hi_k} kept factored.
inline RationalFunction substitute_poly(const LaurentPolynomial& p, const Substitution& subst,
                                        const VarTablePtr& target) {
  const auto& src = *p.vars();
  const std::size_t n = src.size();
  if (p.is_zero()) return RationalFunction::constant(target, BigRational(0));
  if (p.is_monomial()) return substitute_monomial(p.terms()[0].coef, p.terms()[0].mono, src, subst, target);
  const Monomial lo_e = p.min_exponents();
  const Monomial hi_e = p.max_exponents();

  struct Slot {
    bool used = false;
    int lo = 0, hi = 0;
    std::vector<LaurentPolynomial> num_pow, den_pow;
  };
  std::vector<Slot> slots(n);
  const LaurentPolynomial one = LaurentPolynomial::constant(target, BigRational(1));
  RationalFunction denom = RationalFunction::constant(target, BigRational(1));
  for (std::size_t k = 0; k < n; ++k) {
    if (lo_e.exps[k] == 0 && hi_e.exps[k] == 0) continue;
    const RationalFunction& value = replacement(subst, src, k);
    Slot& s = slots[k];
    s.used = true;
    s.lo = std::min<int>(0, lo_e.exps[k]);
    s.hi = std::max<int>(0, hi_e.exps[k]);
    if (s.lo < 0 && value.is_zero()) {
      throw DomainError("rf_substitute: '" + src.name(k) + "' -> 0 under a negative power");
    }
    const int span = s.hi - s.lo;
    s.num_pow.assign(1, one);
    s.den_pow.assign(1, one);
    for (int e = 1; e <= span; ++e) {
      s.num_pow.push_back(s.num_pow.back() * value.num());
      s.den_pow.push_back(s.den_pow.back() * value.den());
    }
    denom = denom * RationalFunction(value.num()).powered(-s.lo) * RationalFunction(value.den()).powered(s.hi);
  }

  LaurentPolynomial numer(target);
  for (const auto& t : p.terms()) {
    LaurentPolynomial acc = LaurentPolynomial::constant(target, t.coef);
    for (std::size_t k = 0; k < n; ++k) {
      const Slot& s = slots[k];
      if (!s.used) continue;
      const int e = t.mono.exps[k];
      const auto& np = s.num_pow[static_cast<std::size_t>(e - s.lo)];
      const auto& dp = s.den_pow[static_cast<std::size_t>(s.hi - e)];
      if (!np.is_constant() || !np.terms()[0].coef.is_one()) acc = acc * np;
      if (!dp.is_constant() || !dp.terms()[0].coef.is_one()) acc = acc * dp;
    }
    numer += acc;
  }
  return RationalFunction(numer) / denom;
}

}  // namespace detail

/// Composite f(subst). All replacements must share one table, which
/// becomes the table of the result.
inline RationalFunction rf_substitute(const RationalFunction& f, const Substitution& subst) {
  if (subst.empty()) throw StructuralError("rf_substitute: empty substitution");
  const VarTablePtr& target = subst.begin()->second.vars();
  for (const auto& [name, value] : subst) require_same_table(target, value.vars(), "rf_substitute");
  const auto& src = *f.vars();
  RationalFunction acc = detail::substitute_monomial(f.scalar(), f.monomial_part(), src, subst, target);
  for (const auto& fac : f.factors()) {
    const RationalFunction v = detail::substitute_poly(*fac.poly, subst, target);
    if (v.is_zero()) {
      if (fac.exp < 0) throw DomainError("rf_substitute: denominator is identically zero");
      return RationalFunction::constant(target, BigRational(0));
    }
    acc = acc * pow(v, fac.exp);
  }
  return acc;
}

}  // namespace g2crystal
