#include <gtest/gtest.h>

#include "support.hpp"
#include "towerdecomp/decomp.hpp"
#include "towerdecomp/embed.hpp"
#include "towerdecomp/error.hpp"
#include "towerdecomp/render.hpp"

using namespace towerdecomp;
using namespace towerdecomp::testing;

namespace {

void expect_matrix(const Tower& t, const std::vector<std::vector<std::string>>& expected) {
  auto m = associated_matrix(t);
  ASSERT_EQ(m.n, expected.size());
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 1; j <= m.n; ++j) {
      EXPECT_EQ(m.at(i, j), el(t, expected[i][j - 1])) << "row " << i << " column " << j;
    }
  }
}

const char* kF1 = "((t1+1)^2 + t1*t2)/(x*t1*(t1+1)*t2)";

}  // namespace

TEST(AssociatedMatrix, TowerF) {
  expect_matrix(f_tower(), {{"1/x", "1/x", "1/(x+1)"},
                            {"0", "1/(x*t1)", "1/(x*(t1+1))"},
                            {"0", "0", "(1+t1)/(x*t1*t2)"}});
}

TEST(AssociatedMatrix, TowerE) {
  expect_matrix(e_tower(), {{"1/x", "1/(x+1)", "0", "0", "0"},
                            {"0", "0", "1/(x*u1)", "1/(x*(u1+1))", "0"},
                            {"0", "0", "0", "0", "0"},
                            {"0", "0", "0", "0", "(u1+1)/(x*u1*(u1+u3))"},
                            {"0", "0", "0", "0", "0"}});
}

TEST(AssociatedMatrix, SingleLog) {
  Tower t = validated(parse_tower_file("gen t1 : log(x)\n"));
  expect_matrix(t, {{"1/x"}});
}

TEST(SignificantData, Examples) {
  Tower t = cli_failing_tower();
  auto sd = significant_data(t);
  EXPECT_EQ(sd.sv, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(sd.sc[0], el(t, "1/x"));
  EXPECT_EQ(sd.sc[1], el(t, "1/(x*t1)"));
  EXPECT_EQ(sd.sc[2], el(t, "1/(x*t1)"));
  EXPECT_EQ(significant_data(e_tower()).sv, (std::vector<std::size_t>{0, 0, 1, 1, 3}));
  Tower one = validated(parse_tower_file("gen t1 : log(x)\n"));
  auto s1 = significant_data(one);
  EXPECT_EQ(s1.sv, std::vector<std::size_t>{0});
  EXPECT_EQ(s1.sc[0], el(one, "1/x"));
}

TEST(WellGenerated, Examples) {
  EXPECT_TRUE(is_well_generated(e_tower()).ok);
  auto f = is_well_generated(f_tower());
  EXPECT_FALSE(f.ok);
  EXPECT_EQ(f.failure, WellGeneratedFailure::ONE);
  // column 3 has three nonzeros; column 2 has two
  EXPECT_EQ(f.positions, (std::vector<std::size_t>{2, 3}));
  auto c = is_well_generated(cli_failing_tower());
  EXPECT_EQ(c.failure, WellGeneratedFailure::CLI);
  EXPECT_EQ(c.positions, std::vector<std::size_t>{3});
  auto mi = is_well_generated(validated(parse_tower_file("gen t1 : log(x)\ngen t2 : log(t1)\ngen t3 : log(x+1)\n")));
  EXPECT_EQ(mi.failure, WellGeneratedFailure::MI);
}

// t3 - t2 = log(x+1) as functions (sympy), so one elimination and one swap
TEST(NormalizeTower, EliminateThenSwap) {
  Tower t = cli_failing_tower();
  auto n = normalize_tower(t);
  const Tower& nt = n.tower;
  ASSERT_EQ(nt.size(), 3U);
  EXPECT_EQ(nt.generator(1).derivative, nt.embed(el(t, "1/x")));
  EXPECT_EQ(nt.generator(2).derivative, nt.embed(el(t, "1/(x+1)")));
  EXPECT_EQ(nt.generator(3).derivative, nt.variable(1).inverse() * nt.variable(0).inverse());
  EXPECT_EQ(significant_data(nt).sv, (std::vector<std::size_t>{0, 0, 1}));
  ASSERT_EQ(n.changes.size(), 2U);
  EXPECT_EQ(n.changes[0].kind, TowerChange::Kind::Eliminate);
  EXPECT_EQ(n.changes[1].kind, TowerChange::Kind::Swap);
  EXPECT_EQ(n.old_to_new[1], nt.variable(1));
  EXPECT_EQ(n.old_to_new[2], nt.variable(3));
  EXPECT_EQ(n.old_to_new[3], nt.variable(2) + nt.variable(3));
  for (std::size_t j = 1; j <= t.size(); ++j) {
    EXPECT_EQ(nt.differentiate(n.old_to_new[j]), substitute(t.generator(j).derivative, n.old_to_new));
  }
  EXPECT_TRUE(nt.is_s_primitive());
}

TEST(NormalizeTower, AlreadyOrderedIsIdentity) {
  Tower t = f_tower();
  auto n = normalize_tower(t);
  EXPECT_TRUE(n.changes.empty());
  for (std::size_t j = 0; j <= t.size(); ++j) EXPECT_EQ(n.old_to_new[j], t.variable(j));
}

TEST(NormalizeTower, DependentInputIsDegenerate) {
  Tower t = parse_tower_file("gen t1 : log(x)\ngen t2 : log(x^2)\n");
  try {
    normalize_tower(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degenerate);
  }
}

TEST(NormalizeTower, NotLogarithmic) {
  try {
    normalize_tower(li_tower());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLogarithmic);
  }
}

TEST(Embed, TowerF) {
  Tower f = f_tower();
  auto e = embed_well_generated(f);
  const Tower& u = e.target;
  ASSERT_EQ(u.size(), 5U);
  EXPECT_EQ(e.images[0], el(u, "x"));
  EXPECT_EQ(e.images[1], el(u, "u1"));
  EXPECT_EQ(e.images[2], el(u, "u1+u3"));
  EXPECT_EQ(e.images[3], el(u, "u2+u4+u5"));
  EXPECT_EQ(e.ell, (std::vector<std::size_t>{1, 3, 5}));
  EXPECT_TRUE(is_well_generated(u).ok);
  EXPECT_TRUE(u.is_s_primitive());
  // the target derivatives are those of E
  Tower ref = e_tower();
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(u.generator(k).derivative, ref.generator(k).derivative);
  // basis images are independent
  std::vector<RationalFunction> images;
  for (const auto& b : e.basis) images.push_back(apply_homomorphism(e, b));
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::vector<RationalFunction> rest;
    for (std::size_t j = 0; j < images.size(); ++j)
      if (j != k) rest.push_back(images[j]);
    EXPECT_FALSE(solve_constant_combination(images[k], rest).has_value());
  }
}

TEST(Embed, WellGeneratedIsIdentity) {
  Tower t = e_tower();
  auto e = embed_well_generated(t);
  EXPECT_EQ(e.target.size(), t.size());
  for (std::size_t j = 0; j <= t.size(); ++j) EXPECT_EQ(e.images[j], e.target.variable(j));
  Tower one = validated(parse_tower_file("gen t1 : log(x)\n"));
  auto e1 = embed_well_generated(one);
  EXPECT_EQ(e1.target.size(), 1U);
  EXPECT_EQ(e1.images[1], e1.target.variable(1));
}

TEST(Embed, RequiresCliAndMi) {
  try {
    embed_well_generated(cli_failing_tower());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionCLIMI);
  }
}

TEST(ApplyHomomorphism, Examples) {
  Tower f = f_tower();
  auto e = embed_well_generated(f);
  const Tower& u = e.target;
  EXPECT_EQ(apply_homomorphism(e, el(f, "t3/x")), el(u, "(u2+u4+u5)/x"));
  EXPECT_EQ(apply_homomorphism(e, el(f, "7/3")), el(u, "7/3"));
  EXPECT_EQ(apply_homomorphism(e, el(f, kF1)), el(u, "((u1+1)^2 + u1*(u1+u3))/(x*u1*(u1+1)*(u1+u3))"));
}

TEST(ApplyHomomorphism, RemainderRefinement) {
  Tower f = f_tower();
  auto e = embed_well_generated(f);
  auto f1 = el(f, kF1);
  auto d = add_decomp_in_field(f, f1);
  EXPECT_EQ(d.r, f1);
  EXPECT_FALSE(apply_homomorphism(e, d.r).is_zero());
  EXPECT_TRUE(add_decomp_in_field(e.target, apply_homomorphism(e, f1)).r.is_zero());
}

TEST(ApplyHomomorphism, CommutesWithDerivation) {
  Rng rng(61);
  Tower f = f_tower();
  auto e = embed_well_generated(f);
  for (int k = 0; k < 100; ++k) {
    auto g = random_element(rng, f);
    EXPECT_EQ(e.target.differentiate(apply_homomorphism(e, g)), apply_homomorphism(e, f.differentiate(g)));
  }
}

TEST(Embed, RandomLogTowersRespectBound) {
  Rng rng(63);
  for (int k = 0; k < 12; ++k) {
    std::size_t n = 1 + k % 3;
    auto nt = normalize_tower(random_log_tower(rng, n));
    auto e = embed_well_generated(nt.tower);
    std::size_t w = e.target.size();
    EXPECT_LE(n, w);
    EXPECT_LE(w, n * (n + 1) / 2);
    EXPECT_TRUE(is_well_generated(e.target).ok) << render_tower_file(e.target);
    for (std::size_t j = 1; j < e.ell.size(); ++j) EXPECT_LT(e.ell[j - 1], e.ell[j]);
  }
}
