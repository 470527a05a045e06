#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "g2crystal/errors.hpp"

namespace g2crystal {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
///
/// Wraps `mpq_class` so that generic code never sees gmpxx expression
/// templates: every operator returns a materialized value.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(long n, long d) {
    if (d == 0) throw DomainError("BigRational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  BigRational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DomainError("BigRational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" in base 10 with an optional leading sign on p.
  static BigRational parse(std::string_view text) {
    if (text.empty()) throw StructuralError("BigRational: empty string");
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view part, bool allow_sign) {
      if (part.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') return false;
      }
      return true;
    };
    std::string_view sv(s);
    if (slash == std::string::npos) {
      if (!valid_int(sv, true)) throw StructuralError("BigRational: malformed '" + s + "'");
      std::string digits(sv[0] == '+' ? sv.substr(1) : sv);
      return BigRational(mpz_class(digits, 10), mpz_class(1));
    }
    const auto n = sv.substr(0, slash);
    const auto d = sv.substr(slash + 1);
    if (!valid_int(n, true) || !valid_int(d, false)) {
      throw StructuralError("BigRational: malformed '" + s + "'");
    }
    std::string ns(n[0] == '+' ? n.substr(1) : n);
    return BigRational(mpz_class(ns, 10), mpz_class(std::string(d), 10));
  }

  std::string str() const { return q_.get_str(10); }

  const mpq_class& raw() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }

  /// *this += a * b without materializing the product as a BigRational.
  void add_product(const BigRational& a, const BigRational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
  }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  BigRational& operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Integer power; negative exponents invert (zero base with e < 0 throws).
inline BigRational pow(const BigRational& base, int e) {
  if (e < 0) {
    if (base.is_zero()) throw DomainError("BigRational: zero to a negative power");
    return pow(BigRational(1) / base, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(n, d);
}

}  // namespace g2crystal
