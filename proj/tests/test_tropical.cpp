#include <gtest/gtest.h>

#include "g2crystal/tropical.hpp"

using namespace g2crystal;

namespace {

// Numerical oracle for the valuation: at x_k = T^{xi_k} with T huge, a
// positive f behaves like C * T^v with C bounded, so v is pinned down by
// T^{v - 1/2} < f < T^{v + 1/2}.
bool valuation_matches(const RationalFunction& f, std::span<const long> xi, long v) {
  const BigRational T(mpz_class(1) << 64, mpz_class(1));
  std::vector<BigRational> p;
  for (long e : xi) p.push_back(pow(T, static_cast<int>(e)));
  const BigRational value = f.evaluate(p);
  const BigRational scaled = value / pow(T, static_cast<int>(v));
  const BigRational bound(mpz_class(1) << 32, mpz_class(1));
  return scaled < bound && scaled > BigRational(1) / bound;
}

std::array<long, 7> at(std::initializer_list<long> v) {
  std::array<long, 7> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

}  // namespace

TEST(Tropicalize, SingleMonomial) {
  const auto q = tropicalize(formulas::gamma(2, x_symbols()));
  ASSERT_EQ(q.num.forms().size(), 1U);
  ASSERT_EQ(q.den.forms().size(), 1U);
  const auto xi = at({4, -1, 2, 7, -3, 5, 0});
  EXPECT_EQ(q.evaluate(xi), 2 * 2 + 2 * (-3) - (-1) - 7 - 5);
}

TEST(Tropicalize, TwoMonomials) {
  const auto q = tropicalize(formulas::eps(2, x_symbols()));
  EXPECT_EQ(q.num.forms().size(), 2U);
  for (long a = -2; a <= 2; ++a) {
    const auto xi = at({0, a, 1, -a, 2, 0, 0});
    EXPECT_EQ(q.evaluate(xi), std::max(xi[1] - xi[2], xi[1] + xi[3] - 2 * xi[2] - xi[4]));
  }
}

TEST(Tropicalize, ConstantIsZero) {
  const auto q = tropicalize(RationalFunction::constant(x_table(), BigRational(7, 2)));
  EXPECT_EQ(q.evaluate(at({1, 2, 3, 4, 5, 6, 7})), 0);
}

TEST(Tropicalize, Eps0IsMaxOverEMinusMonomial) {
  const auto q = tropicalize(formulas::eps0(x_symbols()));
  EXPECT_EQ(q.num.forms().size(), 8U);
  ASSERT_EQ(q.den.forms().size(), 1U);
  EXPECT_EQ(q.den.forms()[0].grad, (std::vector<long>{3, 0, 3, 1, 0, 0, 0}));
}

TEST(Tropicalize, RejectsNonPositive) {
  const RF x0 = RF::variable(x_table(), "x0");
  EXPECT_THROW(tropicalize(x0 * x0 - 1), NotPositiveError);
}

TEST(TropicalPolynomial, DeduplicatesAndRejectsEmpty) {
  const auto t = x_table();
  const AffineForm f{1, std::vector<long>(7, 0)};
  const TropicalPolynomial p(t, {f, f, f});
  EXPECT_EQ(p.forms().size(), 1U);
  EXPECT_THROW(TropicalPolynomial(t, {}), StructuralError);
  EXPECT_THROW(TropicalPolynomial(t, {AffineForm{0, {1, 2}}}), StructuralError);
}

TEST(ValuationOracle, Examples) {
  const auto& t = x_table();
  const RF x = RF::variable(t, "x2") * RF::variable(t, "x4");
  EXPECT_EQ(valuation_oracle(x, at({0, 0, 2, 0, 3, 0, 0})), 5);
  EXPECT_EQ(valuation_oracle(formulas::eps(2, x_symbols()), at({})), 0);
  const RF f = 1 + RF::variable(t, "x0");
  EXPECT_EQ(valuation_oracle(f, at({-1})), 0);
  const RF g = RF::variable(t, "x0") - RF::variable(t, "x1");
  EXPECT_THROW(valuation_oracle(g, at({1, 1})), UndefinedValuation);
}

TEST(ValuationOracle, AgreesWithNumericalLimit) {
  const PointSampler s(3, "trop-test", 1);
  const auto targets = trop_targets();
  ASSERT_EQ(targets.size(), 24U);
  for (std::uint64_t k = 0; k < 15; ++k) {
    auto g = s.engine(k);
    std::array<long, 7> xi{};
    for (std::size_t d = 0; d < 6; ++d) xi[d] = PointSampler::integer_in(g, -5, 5);
    xi[6] = PointSampler::integer_in(g, -3, 3);
    for (const auto& t : targets) {
      const long v = valuation_oracle(t.f, xi);
      EXPECT_TRUE(valuation_matches(t.f, xi, v)) << t.name;
      EXPECT_EQ(tropicalize(t.f).evaluate(xi), v) << t.name;
    }
  }
}

TEST(ValuationOracle, E0CoordinateX3) {
  const auto xs = x_symbols();
  const RF c = x_c();
  const RF x3p = formulas::D(c, xs) * formulas::H(c, xs) / (c * c * formulas::E(xs) * formulas::F(c, xs)) * xs[3];
  EXPECT_TRUE(rf_equal(x3p, act_symbolic(0)[3]));
  const auto q = tropicalize(x3p);
  for (long n = -3; n <= 3; ++n) {
    const auto xi = at({1, -2, 0, 3, -1, 2, n});
    EXPECT_EQ(q.evaluate(xi), valuation_oracle(x3p, xi));
  }
}

TEST(UDCrystal, Examples) {
  const auto& ud = UDCrystal::instance();
  const Cochar o{};
  for (std::size_t i = 0; i < kRank; ++i) EXPECT_EQ(ud.op(i, 0, Cochar{1, -2, 3, -4, 5, -6}), (Cochar{1, -2, 3, -4, 5, -6}));
  EXPECT_EQ(ud.wt(2, o), 0);
  EXPECT_EQ(ud.e(2, o)[2], 1);
  for (std::size_t i = 0; i < kRank; ++i) {
    EXPECT_EQ(ud.e(i, ud.f(i, o)), o);
    EXPECT_EQ(ud.wt(i, ud.e(i, o)) - ud.wt(i, o), 2);
  }
}

TEST(UDCrystal, E2CoordinateIsTropicalC2) {
  const auto& ud = UDCrystal::instance();
  const PointSampler s(8, "ud-c2", 1);
  for (std::uint64_t k = 0; k < 50; ++k) {
    auto g = s.engine(k);
    Cochar xi;
    for (auto& v : xi) v = PointSampler::integer_in(g, -10, 10);
    const long a = 1 + xi[1] - xi[2], b = xi[1] + xi[3] - 2 * xi[2] - xi[4], c = xi[1] - xi[2];
    EXPECT_EQ(ud.e(2, xi)[2], std::max(a, b) - std::max(c, b) + xi[2]);
  }
}

TEST(UDCrystal, SuitesPass) {
  Config cfg;
  for (const auto& r : suite_trop(cfg)) EXPECT_TRUE(r.passed()) << r.to_json().dump();
  for (const auto& r : suite_udcrystal(cfg)) {
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    if (r.identity() == "udcrystal.axioms") EXPECT_GE(r.samples(), 1000U);
  }
}

TEST(UDCrystal, WrongConventionIsDetected) {
  Config cfg;
  cfg.samples = 1;
  const auto r = check_ud_crystal_axioms(cfg, AxiomConvention::column);
  EXPECT_FALSE(r.passed());
}

TEST(Graph, RadiusZeroAndOne) {
  const auto g0 = explore_crystal_graph(Cochar{}, 0);
  EXPECT_EQ(g0.nodes.size(), 1U);
  EXPECT_TRUE(g0.edges.empty());
  const auto g1 = explore_crystal_graph(Cochar{}, 1);
  EXPECT_LE(g1.edges.size(), 6U);
  EXPECT_EQ(g1.nodes.size(), 7U);
  EXPECT_TRUE(g1.consistent());
  const auto& ud = UDCrystal::instance();
  for (const auto& e : g1.edges) {
    EXPECT_EQ(ud.f(e.color, e.from), e.to);
    EXPECT_EQ(ud.eps(e.color, e.to), ud.eps(e.color, e.from) + 1);
  }
  EXPECT_THROW(explore_crystal_graph(Cochar{}, -1), std::invalid_argument);
}

TEST(Graph, DeterministicAndLayered) {
  Config one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = explore_crystal_graph(Cochar{1, 0, -1, 2, 0, 3}, 3, one);
  const auto b = explore_crystal_graph(Cochar{1, 0, -1, 2, 0, 3}, 3, many);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_dot(), b.to_dot());
  for (std::size_t k = 1; k < a.nodes.size(); ++k) {
    EXPECT_LE(a.depth[k - 1], a.depth[k]);
    if (a.depth[k - 1] == a.depth[k]) EXPECT_LT(a.nodes[k - 1], a.nodes[k]);
  }
  EXPECT_TRUE(a.consistent());
}
