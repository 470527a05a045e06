#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "g2crystal/bigrational.hpp"
#include "g2crystal/errors.hpp"
#include "g2crystal/var_table.hpp"

namespace g2crystal {

/// Laurent exponent vector. Slots past the owning table's size stay zero.
struct Monomial {
  std::array<std::int16_t, kMaxVars> exps{};

  int total_degree() const noexcept {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  bool is_one() const noexcept {
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const int s = int{a.exps[i]} + int{b.exps[i]};
      if (s > std::numeric_limits<std::int16_t>::max() || s < std::numeric_limits<std::int16_t>::min()) {
        throw DomainError("Monomial: exponent overflow");
      }
      r.exps[i] = static_cast<std::int16_t>(s);
    }
    return r;
  }

  Monomial inverse() const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = static_cast<std::int16_t>(-exps[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then the earliest
/// variable with a larger exponent wins.
inline bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exps) {
      h ^= static_cast<std::uint16_t>(e);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Term {
  Monomial mono;
  BigRational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of nonzero-coefficient Laurent monomials over a fixed
/// VarTable, stored with terms in descending grlex order. The stored form is
/// canonical, so structural equality is mathematical equality.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(VarTablePtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw StructuralError("LaurentPolynomial: null variable table");
  }

  static LaurentPolynomial constant(VarTablePtr vars, const BigRational& c) {
    LaurentPolynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static LaurentPolynomial variable(VarTablePtr vars, std::string_view name) {
    const auto i = vars ? vars->require(name) : throw StructuralError("null table");
    Monomial m;
    m.exps[i] = 1;
    return monomial(std::move(vars), BigRational(1), m);
  }

  static LaurentPolynomial monomial(VarTablePtr vars, const BigRational& c, const Monomial& m) {
    LaurentPolynomial p(std::move(vars));
    p.check_monomial(m);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPolynomial from_terms(VarTablePtr vars, std::vector<Term> terms) {
    LaurentPolynomial p(std::move(vars));
    for (const auto& t : terms) p.check_monomial(t.mono);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const VarTablePtr& vars() const noexcept { return vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Greatest term under grlex. Precondition: nonzero.
  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("LaurentPolynomial: zero has no leading term");
    return terms_.front();
  }

  bool all_coefficients_positive() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.sign() > 0; });
  }

  /// Componentwise minimum exponent over all terms (zero vector for 0).
  Monomial min_exponents() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_[0].mono;
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = std::min(m.exps[i], t.mono.exps[i]);
    }
    return m;
  }

  Monomial max_exponents() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_[0].mono;
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = std::max(m.exps[i], t.mono.exps[i]);
    }
    return m;
  }

  /// Total degree after clearing the monomial denominator: the largest
  /// total degree of m / min_exponents().
  int cleared_total_degree() const {
    if (terms_.empty()) return 0;
    const int base = min_exponents().total_degree();
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree() - base);
    return d;
  }

  /// If *this == k * m * q for a scalar k and a monomial m, returns (k, m).
  std::optional<std::pair<BigRational, Monomial>> proportional_to(const LaurentPolynomial& q) const {
    if (!same_table(vars_, q.vars_) || terms_.size() != q.terms_.size() || terms_.empty()) {
      return std::nullopt;
    }
    const BigRational k = terms_[0].coef / q.terms_[0].coef;
    const Monomial m = terms_[0].mono * q.terms_[0].mono.inverse();
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == q.terms_[i].mono * m)) return std::nullopt;
      if (!(terms_[i].coef == k * q.terms_[i].coef)) return std::nullopt;
    }
    return std::make_pair(k, m);
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = add(*this, o, false); }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = add(*this, o, true); }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = mul(*this, o); }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return add(a, b, false);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return add(a, b, true);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return mul(a, b);
  }

  LaurentPolynomial scaled(const BigRational& k) const {
    if (k.is_zero()) return LaurentPolynomial(vars_);
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.coef *= k;
    return r;
  }

  /// Multiplication by a monomial keeps grlex order, so no re-sort.
  LaurentPolynomial shifted(const Monomial& m) const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  LaurentPolynomial pow(unsigned e) const {
    LaurentPolynomial result = constant(vars_, BigRational(1));
    LaurentPolynomial base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return result;
  }

  /// Exact value at a point given positionally against vars().
  BigRational evaluate(std::span<const BigRational> values) const {
    if (values.size() != vars_->size()) throw StructuralError("evaluate: point has wrong arity");
    const std::size_t n = vars_->size();
    std::vector<std::unordered_map<int, BigRational>> cache(n);
    auto power = [&](std::size_t v, int e) -> const BigRational& {
      auto it = cache[v].find(e);
      if (it != cache[v].end()) return it->second;
      if (e < 0 && values[v].is_zero()) throw DomainError("evaluate: zero raised to a negative power");
      return cache[v].emplace(e, g2crystal::pow(values[v], e)).first->second;
    };
    BigRational sum(0);
    for (const auto& t : terms_) {
      BigRational term = t.coef;
      for (std::size_t v = 0; v < n; ++v) {
        if (t.mono.exps[v] != 0) term *= power(v, t.mono.exps[v]);
      }
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return same_table(a.vars_, b.vars_) && a.terms_ == b.terms_;
  }

  /// Structural hash, consistent with ==.
  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL + terms_.size();
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& t : terms_) {
      mix(MonomialHash{}(t.mono));
      const auto& q = t.coef.raw();
      mix(static_cast<std::uint64_t>(mpz_getlimbn(q.get_num_mpz_t(), 0)));
      mix(static_cast<std::uint64_t>(mpz_getlimbn(q.get_den_mpz_t(), 0)));
      mix(static_cast<std::uint64_t>(t.coef.sign() + 1));
    }
    return static_cast<std::size_t>(h);
  }

  /// Total structural order (size, then terms); used to sort factor lists.
  friend std::strong_ordering structural_compare(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() <=> b.terms_.size();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& x = a.terms_[i];
      const auto& y = b.terms_[i];
      if (!(x.mono == y.mono)) return grlex_less(x.mono, y.mono) ? std::strong_ordering::less : std::strong_ordering::greater;
      if (auto c = x.coef <=> y.coef; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void check_monomial(const Monomial& m) const {
    for (std::size_t i = vars_->size(); i < kMaxVars; ++i) {
      if (m.exps[i] != 0) throw StructuralError("LaurentPolynomial: exponent beyond table size");
    }
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coef += t.coef;
      } else {
        if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
    terms_ = std::move(merged);
  }

  static LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b, bool subtract) {
    require_same_table(a.vars_, b.vars_, subtract ? "poly sub" : "poly add");
    LaurentPolynomial r(a.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grlex_less(b.terms_[j].mono, a.terms_[i].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_less(a.terms_[i].mono, b.terms_[j].mono)) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        BigRational c = subtract ? a.terms_[i].coef - b.terms_[j].coef : a.terms_[i].coef + b.terms_[j].coef;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static LaurentPolynomial mul(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_table(a.vars_, b.vars_, "poly mul");
    if (a.is_zero() || b.is_zero()) return LaurentPolynomial(a.vars_);
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coef);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coef);
    std::unordered_map<Monomial, BigRational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        acc[ta.mono * tb.mono].add_product(ta.coef, tb.coef);
      }
    }
    LaurentPolynomial r(a.vars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_less(y.mono, x.mono); });
    return r;
  }

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

}  // namespace g2crystal
