#include <gtest/gtest.h>

#include <random>

#include "g2crystal/named_formulas.hpp"

using namespace g2crystal;

namespace {

const VarTablePtr& table() {
  static const VarTablePtr t = make_var_table({"x0", "x1", "x2", "x3", "x4", "x5"});
  return t;
}

RF var(const char* n) { return RF::variable(table(), n); }
RF num(long k) { return RF::constant(table(), BigRational(k)); }
LaurentPolynomial pvar(const char* n) { return LaurentPolynomial::variable(table(), n); }
LaurentPolynomial pconst(long k) { return LaurentPolynomial::constant(table(), BigRational(k)); }

// Random Laurent polynomial with small signed coefficients and exponents.
LaurentPolynomial random_poly(std::mt19937_64& g, bool positive) {
  std::vector<Term> terms;
  const int n = 1 + static_cast<int>(g() % 4);
  for (int k = 0; k < n; ++k) {
    Term t;
    for (std::size_t v = 0; v < 6; ++v) t.mono.exps[v] = static_cast<std::int16_t>(static_cast<int>(g() % 5) - 2);
    long c = 1 + static_cast<long>(g() % 7);
    if (!positive && g() % 3 == 0) c = -c;
    t.coef = BigRational(c, 1 + static_cast<long>(g() % 3));
    terms.push_back(t);
  }
  return LaurentPolynomial::from_terms(table(), terms);
}

RF random_rf(std::mt19937_64& g, bool positive) {
  auto d = random_poly(g, true);
  return RF(random_poly(g, positive), d);
}

std::vector<BigRational> random_point(std::mt19937_64& g) {
  std::vector<BigRational> p;
  for (int k = 0; k < 6; ++k) p.emplace_back(1 + static_cast<long>(g() % 50), 1 + static_cast<long>(g() % 50));
  return p;
}

}  // namespace

TEST(BigRational, ParseAndPrint) {
  EXPECT_EQ(BigRational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(BigRational::parse("+7").str(), "7");
  EXPECT_THROW(BigRational::parse("1/0"), DomainError);
  EXPECT_THROW(BigRational::parse("1/-2"), StructuralError);
  EXPECT_THROW(BigRational::parse("abc"), StructuralError);
  EXPECT_THROW(BigRational(1, 0), DomainError);
}

TEST(LaurentPolynomial, Arithmetic) {
  const auto x0 = pvar("x0");
  EXPECT_EQ((x0 + pconst(1)) * (x0 - pconst(1)), x0 * x0 - pconst(1));
  EXPECT_EQ(x0 + LaurentPolynomial(table()), x0);
  const auto m = pvar("x2") * pvar("x4");
  Monomial sq;
  sq.exps[2] = 2;
  sq.exps[4] = 2;
  EXPECT_EQ(m * m, LaurentPolynomial::monomial(table(), BigRational(1), sq));
  EXPECT_TRUE((x0 - x0).is_zero());
}

TEST(LaurentPolynomial, TableMismatchIsStructural) {
  const auto other = make_var_table({"x0", "x1", "x2", "x3", "x4", "y5"});
  EXPECT_THROW(pvar("x0") + LaurentPolynomial::variable(other, "x0"), StructuralError);
  EXPECT_THROW(var("x0") + RF::variable(other, "x0"), StructuralError);
}

TEST(RationalFunction, Examples) {
  const RF x0 = var("x0"), x1 = var("x1"), x2 = var("x2"), x3 = var("x3");
  EXPECT_TRUE(rf_equal(1 / x0 + x3 / x0, (1 + x3) / x0));
  const RF a = (x0 + x1 * x2) / (x3 + 2);
  EXPECT_TRUE(rf_equal(a / a, num(1)));
  EXPECT_TRUE(rf_equal(x2 / x1 + x3 / (x2 * x2), (pow(x2, 3) + x1 * x3) / (x1 * x2 * x2)));
  EXPECT_TRUE(rf_equal(x0 * x0 / x0, x0));
  EXPECT_FALSE(rf_equal(x0, x1));
  EXPECT_THROW(x0 / num(0), DomainError);
}

TEST(RationalFunction, CancellationThroughFactors) {
  const RF x0 = var("x0"), x1 = var("x1");
  const RF p = x0 + x1 + 1;
  const RF f = pow(p, 5) / pow(p, 3);
  EXPECT_TRUE(rf_equal(f, p * p));
  EXPECT_EQ(f.den().size(), 1U);
}

TEST(RationalFunction, DivisionDegreesAreExpanded) {
  // (x0^2 - 1) / (x0 - 1) has no common factor pulled out automatically,
  // but equality is decided by cross-multiplication.
  const RF x0 = var("x0");
  EXPECT_TRUE(rf_equal((x0 * x0 - 1) / (x0 - 1), x0 + 1));
}

TEST(RationalFunction, Gamma1ProductFormMatchesSchubert) {
  const auto xs = x_symbols();
  const RF printed = pow(xs[1], 2) * pow(xs[3], 2) * pow(xs[5], 2) / (xs[0] * pow(xs[2], 3) * pow(xs[4], 3));
  // Schubert product over w1 = 0 1 2 1 2 1 with exponents a_{i_k, 1}.
  RF product = RF::constant(x_table(), BigRational(1));
  const int exps[6] = {-1, 2, -3, 2, -3, 2};
  for (int k = 0; k < 6; ++k) product *= pow(xs[k], exps[k]);
  EXPECT_TRUE(rf_equal(printed, product));
  EXPECT_TRUE(rf_equal(printed, schubert_gamma(chart_w1(), 1, xs)));
}

TEST(RationalFunction, EvaluationExamples) {
  std::vector<BigRational> ones(7, BigRational(1));
  EXPECT_EQ(formulas::X(Basis::b1, x_symbols()).evaluate(ones), BigRational(12));
  EXPECT_EQ(formulas::X(Basis::empty, x_symbols()).evaluate(ones), BigRational(1));
  EXPECT_EQ(formulas::eps(2, x_symbols()).evaluate(ones), BigRational(2));
}

TEST(RationalFunction, EvaluationErrorCarriesPoint) {
  const RF f = 1 / (var("x0") - var("x1"));
  std::vector<BigRational> p(6, BigRational(3));
  try {
    (void)f.evaluate(p);
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.point()).find("x0=3"), std::string::npos);
  }
  RationalPoint missing{{"x0", BigRational(1)}};
  EXPECT_THROW((void)var("x1").evaluate(missing), StructuralError);
}

TEST(RationalFunction, Positivity) {
  EXPECT_EQ(rf_is_positive(var("x2") * var("x4")), Positivity::verified_positive);
  EXPECT_EQ(rf_is_positive(var("x0") * var("x0") - 1), Positivity::not_verified);
  for (const auto& f : named_formulas()) {
    EXPECT_EQ(rf_is_positive(f.build()), Positivity::verified_positive) << f.name;
  }
}

TEST(RationalFunction, PositivityClosedUnderOperations) {
  std::mt19937_64 g(11);
  for (int k = 0; k < 50; ++k) {
    const RF a = random_rf(g, true), b = random_rf(g, true);
    ASSERT_EQ(rf_is_positive(a), Positivity::verified_positive);
    EXPECT_EQ(rf_is_positive(a + b), Positivity::verified_positive);
    EXPECT_EQ(rf_is_positive(a * b), Positivity::verified_positive);
    EXPECT_EQ(rf_is_positive(a / b), Positivity::verified_positive);
  }
}

TEST(RationalFunction, EvaluationHomomorphism) {
  std::mt19937_64 g(7);
  for (int k = 0; k < 60; ++k) {
    const RF a = random_rf(g, false), b = random_rf(g, false);
    const auto p = random_point(g);
    BigRational va, vb;
    try {
      va = a.evaluate(p);
      vb = b.evaluate(p);
    } catch (const EvaluationError&) {
      continue;
    }
    EXPECT_EQ((a + b).evaluate(p), va + vb);
    EXPECT_EQ((a - b).evaluate(p), va - vb);
    EXPECT_EQ((a * b).evaluate(p), va * vb);
    if (!vb.is_zero()) {
      EXPECT_EQ((a / b).evaluate(p), va / vb);
    }
  }
}

TEST(RationalFunction, Canonicality) {
  std::mt19937_64 g(3);
  for (int k = 0; k < 40; ++k) {
    const RF a = random_rf(g, false), b = random_rf(g, false);
    EXPECT_EQ(rf_equal(a, b), rf_equal(b, a));
    EXPECT_EQ(rf_equal(a - b, RF::constant(table(), BigRational(0))), rf_equal(a, b));
    // Same function, different construction order.
    EXPECT_TRUE(rf_equal((a + b) * (a - b), a * a - b * b));
  }
}

TEST(RationalFunction, SubstitutionCompatibleWithEvaluation) {
  std::mt19937_64 g(5);
  for (int k = 0; k < 30; ++k) {
    const RF f = random_rf(g, true);
    Substitution s;
    std::vector<RF> images;
    for (int v = 0; v < 6; ++v) {
      // (x_a + k) / x_b keeps the composite small
      const RF a = var(table()->name(g() % 6).c_str()), b = var(table()->name(g() % 6).c_str());
      images.push_back((a + num(1 + static_cast<long>(g() % 4))) / b);
      s.emplace(table()->name(static_cast<std::size_t>(v)), images.back());
    }
    const auto p = random_point(g);
    std::vector<BigRational> inner;
    for (const auto& im : images) inner.push_back(im.evaluate(p));
    EXPECT_EQ(rf_substitute(f, s).evaluate(p), f.evaluate(inner));
  }
}

TEST(RationalFunction, SubstitutionExamples) {
  const auto& t = x_table();
  const RF x0 = RF::variable(t, "x0"), c = RF::variable(t, "c");
  Substitution s{{"x0", c * x0}};
  EXPECT_TRUE(rf_equal(rf_substitute(x0, s), c * x0));
  // A denominator that vanishes identically after substitution.
  const RF f = 1 / (x0 - RF::variable(t, "x1"));
  Substitution same{{"x0", x0}, {"x1", x0}};
  EXPECT_THROW(rf_substitute(f, same), DomainError);
  EXPECT_THROW(rf_substitute(f, Substitution{{"x0", x0}}), StructuralError);
}

TEST(RationalFunction, PullbacksAlongSigma) {
  const auto y = sigma_symbolic();
  Substitution s;
  for (int k = 0; k < 6; ++k) s.emplace("y" + std::to_string(k), y[static_cast<std::size_t>(k)]);
  const auto ys = y_symbols();
  const auto xs = x_symbols();
  const RF gamma0_y = pow(ys[0], 2) / (ys[1] * ys[3] * ys[5]);
  EXPECT_TRUE(rf_equal(rf_substitute(gamma0_y, s), pow(xs[0], 2) / (xs[1] * xs[3] * xs[5])));
  const RF eps0_y = ys[1] * ys[3] / ys[0];
  EXPECT_TRUE(rf_equal(rf_substitute(eps0_y, s), formulas::E(xs) / (pow(xs[0], 3) * pow(xs[2], 3) * xs[3])));
}

TEST(ExpressionJson, RoundTripIsExact) {
  std::mt19937_64 g(9);
  for (int k = 0; k < 30; ++k) {
    const RF f = random_rf(g, false);
    const Json j = to_json(f);
    const RF back = rational_function_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_TRUE(rf_equal(back, f));
  }
  for (const auto& f : named_formulas()) {
    const Json j = to_json(f.build());
    EXPECT_EQ(to_json(rational_function_from_json(j)).dump(), j.dump()) << f.name;
  }
}

TEST(ExpressionJson, RejectsMalformed) {
  EXPECT_THROW(rational_function_from_json(Json::parse(R"({"vars":["x0"],"num":[]})")), StructuralError);
  EXPECT_THROW(rational_function_from_json(Json::parse(R"({"vars":["q"],"num":[],"den":[]})")), StructuralError);
  EXPECT_THROW(rational_function_from_json(
                   Json::parse(R"({"vars":["x0"],"num":[{"coef":"1","exp":[1]}],"den":[]})")),
               DomainError);
  EXPECT_THROW(rational_function_from_json(
                   Json::parse(R"({"vars":["x0"],"num":[{"coef":1,"exp":[1]}],"den":[{"coef":"1","exp":[0]}]})")),
               StructuralError);
}
