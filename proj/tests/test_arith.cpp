#include <gtest/gtest.h>

#include "support.hpp"
#include "towerdecomp/decomp.hpp"
#include "towerdecomp/error.hpp"
#include "towerdecomp/rational_function.hpp"
#include "towerdecomp/univariate.hpp"

using namespace towerdecomp;
using namespace towerdecomp::testing;

namespace {

const std::vector<std::string> kNames = {"x", "t1", "t2", "t3"};

Polynomial P(const std::string& s) {
  auto f = parse_expression(s, kNames);
  EXPECT_TRUE(f.is_polynomial()) << s;
  return f.num() * (1 / f.den().constant_value());
}

RationalFunction R(const std::string& s) { return parse_expression(s, kNames); }

}  // namespace

TEST(PolyGcd, CommonFactorByConstruction) { EXPECT_EQ(poly_gcd(P("t1^2 - x^2"), P("t1 - x"), 1), P("t1 - x")); }

TEST(PolyGcd, WithZeroIsMonicInput) { EXPECT_EQ(poly_gcd(P("2*t1 + 4*x"), P("0"), 1), P("t1 + 2*x")); }

// sympy: gcd(t1*(t1+x)^2, d/dt1) = t1 + x
TEST(PolyGcd, RepeatedFactorAgainstDerivative) {
  Polynomial p = P("t1*(t1+x)^2");
  EXPECT_EQ(poly_gcd(p, p.derivative(1), 1), P("t1 + x"));
}

TEST(PolyGcd, CoprimeInputs) { EXPECT_EQ(gcd(P("x*t1 + 1"), P("t1 - x")), P("1")); }

TEST(PolyGcd, MultivariateRandomProducts) {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    Polynomial c = random_polynomial(rng, 4, 3, 2, 2);
    Polynomial a = random_polynomial(rng, 4, 3, 2, 3);
    Polynomial b = random_polynomial(rng, 4, 3, 2, 3);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial g = gcd(c * a, c * b);
    EXPECT_TRUE(divide(c * a, g).has_value());
    EXPECT_TRUE(divide(c * b, g).has_value());
    EXPECT_TRUE(divide(g, c).has_value());
  }
}

// sympy sqf_list: t1^3 + 2x t1^2 + x^2 t1 = t1 * (t1 + x)^2
TEST(Squarefree, RepeatedFactor) {
  auto f = squarefree_decomposition(P("t1^3 + 2*x*t1^2 + x^2*t1"), 1);
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f[0].factor, P("t1"));
  EXPECT_EQ(f[0].multiplicity, 1U);
  EXPECT_EQ(f[1].factor, P("t1 + x"));
  EXPECT_EQ(f[1].multiplicity, 2U);
}

TEST(Squarefree, AlreadySquarefree) {
  auto f = squarefree_decomposition(P("t1 - x"), 1);
  ASSERT_EQ(f.size(), 1U);
  EXPECT_EQ(f[0].factor, P("t1 - x"));
  EXPECT_EQ(f[0].multiplicity, 1U);
}

TEST(Squarefree, SquareOfLinear) {
  auto f = squarefree_decomposition(P("(t1 - 1)^2"), 1);
  ASSERT_EQ(f.size(), 1U);
  EXPECT_EQ(f[0].factor, P("t1 - 1"));
  EXPECT_EQ(f[0].multiplicity, 2U);
}

TEST(Squarefree, ZeroThrows) {
  try {
    squarefree_decomposition(P("0"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
  }
}

TEST(Squarefree, ProductReconstructs) {
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    Polynomial a = P("t1 + x") + random_polynomial(rng, 4, 0, 1, 1);
    Polynomial b = P("t1^2 - 3") + random_polynomial(rng, 4, 0, 1, 1);
    Polynomial p = a * b.pow(2) * a.pow(3);
    Polynomial prod = P("1");
    for (const auto& f : squarefree_decomposition(p, 1)) {
      EXPECT_TRUE(is_squarefree_in(f.factor, 1));
      prod = prod * f.factor.pow(f.multiplicity);
    }
    EXPECT_TRUE(divide(p, prod).has_value());
    EXPECT_EQ(exact_divide(p, prod).degree(1), 0U);
  }
}

TEST(ProperSplit, PolynomialDivision) {
  auto s = split_proper_poly(R("(t1^2 + 1)/t1"), 1);
  EXPECT_EQ(s.proper, R("1/t1"));
  EXPECT_EQ(s.poly, R("t1"));
}

TEST(ProperSplit, AlreadyProper) {
  auto s = split_proper_poly(R("1/(t1*t2)"), 2);
  EXPECT_EQ(s.proper, R("1/(t1*t2)"));
  EXPECT_TRUE(s.poly.is_zero());
}

TEST(ProperSplit, DenominatorFreeOfVariable) {
  auto s = split_proper_poly(R("(t2^2 - 2*x*t1*t2)/t1^2"), 2);
  EXPECT_TRUE(s.proper.is_zero());
  EXPECT_EQ(s.poly, R("t2^2/t1^2 - 2*x*t2/t1"));
}

TEST(ProperSplit, SumsBack) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    RationalFunction f(random_polynomial(rng, 4, 3, 3, 3), random_polynomial(rng, 4, 3, 2, 2) + P("t2 + 5"));
    auto s = split_proper_poly(f, 2);
    EXPECT_EQ(s.proper + s.poly, f);
    EXPECT_TRUE(is_proper_in(s.proper, 2));
    EXPECT_FALSE(s.poly.den().depends_on(2));
  }
}

TEST(RationalFunctionArith, NormalizedAndCanonical) {
  EXPECT_EQ(R("(2*x)/(4*x*t1)"), R("1/(2*t1)"));
  EXPECT_EQ(R("1/x + 1/t1"), R("(x + t1)/(x*t1)"));
  EXPECT_EQ(R("t1/t1"), R("1"));
  EXPECT_TRUE(R("x/x - 1").is_zero());
  EXPECT_EQ(R("1/(2*x + 2)").den().leading_coefficient(), Rational(1));
}

TEST(RationalFunctionArith, DivisionByZeroThrows) {
  try {
    R("1") / R("0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(RationalFunctionArith, FieldAxiomsOnRandomElements) {
  Rng rng(21);
  Tower t = li_tower();
  for (int k = 0; k < 40; ++k) {
    auto a = random_element(rng, t);
    auto b = random_element(rng, t);
    auto c = random_element(rng, t);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, t.zero());
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Univariate, BezoutAndResultant) {
  std::size_t nv = 4;
  auto a = UnivariatePolynomial::from(R("t1^2 + x"), 1);
  auto b = UnivariatePolynomial::from(R("t1 - 1"), 1);
  auto c = UnivariatePolynomial::from(R("1"), 1);
  auto [s, u] = solve_bezout(a, b, c);
  EXPECT_EQ((s * a + u * b).to_rational_function(1), R("1"));
  EXPECT_LT(s.degree(), b.degree());
  // res(t^2 + x, t - 1) = 1 + x
  EXPECT_EQ(resultant(a, b), R("1 + x"));
  EXPECT_EQ(gcd(a * b, b * b).to_rational_function(1), R("t1 - 1"));
  EXPECT_EQ(a.nvars(), nv);
}

TEST(LinearSystem, ExactSolveAndInconsistency) {
  auto s = solve_linear_system({{1, 1}, {1, -1}}, {3, 1});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ((*s)[0], Rational(2));
  EXPECT_EQ((*s)[1], Rational(1));
  EXPECT_FALSE(solve_linear_system({{1, 1}, {2, 2}}, {1, 3}).has_value());
  auto free = solve_linear_system({{1, 1}}, {Rational(1, 2)});
  ASSERT_TRUE(free.has_value());
  EXPECT_EQ((*free)[0] + (*free)[1], Rational(1, 2));
}
