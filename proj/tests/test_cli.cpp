#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"
#include "towerdecomp/cli.hpp"
#include "towerdecomp/error.hpp"
#include "towerdecomp/parse.hpp"
#include "towerdecomp/render.hpp"

using namespace towerdecomp;
using namespace towerdecomp::testing;

namespace {

std::string data(const std::string& file) {
  const char* dir = std::getenv("TOWERDECOMP_DATA");
  return std::string(dir ? dir : TOWERDECOMP_TEST_DATA) + "/" + file;
}

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, DecompText) {
  auto r = cli({"decomp", "--tower", data("li.tower"), "--expr", "t2/t1 + 1/(t1*t2)"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "g = 1/2*t2^2\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "r = 1/(t1*t2)\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "integrable: no\n"));
  EXPECT_TRUE(contains(r.out, "verified: f = g' + r"));
}

TEST(Cli, DecompJsonOneObjectPerExpr) {
  auto r = cli({"decomp", "--json", "--tower", data("li.tower"), "--expr", "t2/t1", "--expr", "t3/x"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> objs;
  while (std::getline(lines, line)) objs.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(objs.size(), 2u);
  for (const auto& j : objs)
    for (const char* key : {"tower", "input", "g", "r", "integrable", "verified"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(objs[0]["g"], "1/2*t2^2");
  EXPECT_EQ(objs[0]["r"], "0");
  EXPECT_EQ(objs[0]["integrable"], true);
  // parse the printed g back and check it
  Tower t = li_tower();
  EXPECT_EQ(t.differentiate(el(t, objs[1]["g"])), el(t, "t3/x"));
}

TEST(Cli, IntegrateFindsIntegral) {
  auto r = cli({"integrate", "--tower", data("li.tower"), "--expr", "t3 + 1/t1"});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "integral: x*t3\n")) << r.out;
  r = cli({"integrate", "--tower", data("li.tower"), "--expr", "1/(t1*t2)"});
  EXPECT_TRUE(contains(r.out, "no integral in the tower")) << r.out;
}

TEST(Cli, CheckAccepts) {
  auto r = cli({"check", "--tower", data("li.tower")});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "S-primitive: yes"));
  r = cli({"check", "--tower", data("cli_failing.tower")});
  EXPECT_TRUE(contains(r.out, "well-generated: no (CLI fails at generator 3)")) << r.out;
  r = cli({"check", "--tower", data("f.tower")});
  EXPECT_TRUE(contains(r.out, "well-generated: no (ONE fails at columns 2, 3)")) << r.out;
}

TEST(Cli, CheckReportsDependence) {
  auto r = cli({"check", "--tower", data("dependent.tower")});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "S-primitive: no (dependence: t3)")) << r.out;
  EXPECT_TRUE(contains(r.out, "dependence: t3' = 0*t1' + 2*t2'")) << r.out;
  r = cli({"check", "--json", "--tower", data("dependent.tower")});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["s_primitive"], false);
  EXPECT_EQ(j["dependence"], nlohmann::json::array({"0", "2"}));
}

TEST(Cli, DecompRejectsDependentTower) {
  auto r = cli({"decomp", "--tower", data("dependent.tower"), "--expr", "t3"});
  EXPECT_EQ(r.rc, kExitValidation);
  EXPECT_TRUE(contains(r.err, "not S-primitive: dependence")) << r.err;
}

TEST(Cli, NormalizeShiftsGenerator) {
  auto r = cli({"decomp", "--tower", data("shifted.tower"), "--expr", "1/t1^2"});
  EXPECT_EQ(r.rc, kExitValidation);
  EXPECT_TRUE(contains(r.err, "not simple: t2")) << r.err;
  r = cli({"check", "--normalize", "--tower", data("shifted.tower")});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "shift t2: -x/t1")) << r.out;
  EXPECT_TRUE(contains(r.out, "S-primitive: yes"));
  r = cli({"decomp", "--normalize", "--tower", data("shifted.tower"), "--expr", "1/t1^2"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "g = (t1*t2 - x)/t1\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "integrable: yes"));
}

TEST(Cli, EmbedImageRemainder) {
  auto r = cli({"embed", "--json", "--tower", data("f.tower"), "--expr", "t3/x"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["w"], 5);
  EXPECT_EQ(j["identity"], false);
  Tower u = e_tower();
  EXPECT_EQ(el(u, j["phi"]["t3"]), el(u, "u2 + u4 + u5"));
  ASSERT_EQ(j["inputs"].size(), 1u);
  EXPECT_EQ(el(u, j["inputs"][0]["image"]), el(u, "(u2+u4+u5)/x"));
  // the remainder of the image, checked against the reference decomposition
  auto rt = el(u, j["inputs"][0]["r_target"]);
  auto gt = el(u, j["inputs"][0]["g_target"]);
  EXPECT_EQ(u.differentiate(gt) + rt, el(u, "(u2+u4+u5)/x"));
  EXPECT_EQ(rt, el(u, "(-x*u1*u3 - x*u1^2 - x*u1 - u1 - x - 1)/(x^2*u3 + x^2*u1 + x*u3 + x*u1)"));
}

TEST(Cli, EmbedIdentityNotice) {
  auto r = cli({"embed", "--tower", data("finer.tower")});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "identity embedding")) << r.out;
  EXPECT_TRUE(contains(r.out, "w = 3"));
}

TEST(Cli, EmbedNormalizesCliFailure) {
  auto r = cli({"embed", "--tower", data("cli_failing.tower")});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "normalize: swap generators 2 and 3")) << r.out;
  EXPECT_TRUE(contains(r.out, "phi(t3) = u3 + u2")) << r.out;
}

TEST(Cli, Matrix) {
  auto r = cli({"matrix", "--tower", data("f.tower")});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_EQ(r.out,
            "P0: 1/x | 1/x | 1/(x + 1)\n"
            "P1: 0 | 1/(x*t1) | 1/(x*t1 + x)\n"
            "P2: 0 | 0 | (t1 + 1)/(x*t1*t2)\n");
  r = cli({"matrix", "--json", "--tower", data("f.tower")});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matrix"].size(), 3u);
  EXPECT_TRUE(j.contains("sv"));
}

TEST(Cli, ElementaryWitness) {
  auto r = cli({"elementary", "--tower", data("li.tower"), "--expr", "1/(t1*t2) + (t2 - 2*x*t1)/t1^2 + t3"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "verdict: Yes")) << r.out;
  EXPECT_TRUE(contains(r.out, "witness: log(t2)\n")) << r.out;
  r = cli({"elementary", "--tower", data("li.tower"), "--expr", "1/(x*t1*t2)"});
  EXPECT_TRUE(contains(r.out, "verdict: No")) << r.out;
  EXPECT_TRUE(contains(r.out, "certificate: non-constant residue 1/x")) << r.out;
}

TEST(Cli, LatexOutput) {
  auto r = cli({"decomp", "--latex", "--tower", data("li.tower"), "--expr", "t2/t1 + 1/(t1*t2)"});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_TRUE(contains(r.out, "g = \\frac{1}{2} t_{2}^{2}")) << r.out;
}

TEST(Cli, ParseErrors) {
  auto r = cli({"decomp", "--tower", data("li.tower"), "--expr", "(x"});
  EXPECT_EQ(r.rc, kExitParse);
  EXPECT_TRUE(contains(r.err, "SyntaxError")) << r.err;
  try {
    parse_expression("(x", li_tower());
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.index(), 2u);
  }
  r = cli({"decomp", "--tower", data("li.tower"), "--expr", "y"});
  EXPECT_EQ(r.rc, kExitParse);
  EXPECT_TRUE(contains(r.err, "UnknownName"));
  r = cli({"decomp", "--tower", data("missing.tower"), "--expr", "x"});
  EXPECT_EQ(r.rc, kExitParse);
  r = cli({"decomp", "--json", "--tower", data("li.tower"), "--expr", "1/0"});
  EXPECT_EQ(r.rc, kExitParse);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "DivisionByZero");
}

TEST(Cli, RenderParseRoundTrip) {
  Rng rng(4242);
  for (Tower t : {li_tower(), e_tower()}) {
    for (int k = 0; k < 100; ++k) {
      auto f = random_element(rng, t);
      EXPECT_EQ(parse_expression(render(f, t.names()), t), f);
    }
    EXPECT_EQ(render_tower_file(parse_tower_file(render_tower_file(t))), render_tower_file(t));
  }
}

TEST(Cli, BinaryExitCodes) {
  const char* env = std::getenv("TOWERDECOMP_BIN");
  const char* bin = env ? env : TOWERDECOMP_TEST_BIN;
  auto status = [&](const std::string& args) {
    std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
    int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  const std::string li = " --tower " + data("li.tower");
  EXPECT_EQ(status("decomp" + li + " --expr 't2/t1'"), 0);
  EXPECT_EQ(status("decomp" + li + " --expr '(x'"), 1);
  EXPECT_EQ(status("decomp --tower " + data("dependent.tower") + " --expr t3"), 2);
  EXPECT_EQ(status("nosuchcommand"), 1);
}
