#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "g2crystal/cli.hpp"

using namespace g2crystal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, VerifyModule) {
  const auto r = run({"verify", "module"});
  EXPECT_EQ(r.code, kExitPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["suite"], "module");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["config"]["seed"], 0);
  EXPECT_EQ(j["config"]["samples"], 100);
  EXPECT_EQ(j["config"]["coeff_bound"], 1000);
  EXPECT_EQ(j["config"]["term_budget"], 2000000);
}

TEST(Cli, VerifyLemma) {
  const auto r = run({"verify", "lemma51"});
  EXPECT_EQ(r.code, kExitPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 30U);
  for (const auto& rep : j["reports"]) {
    EXPECT_TRUE(rep["passed"].get<bool>());
    EXPECT_TRUE(rep["counterexamples"].empty());
  }
}

TEST(Cli, LiteratureVariantIsInformational) {
  const auto r = run({"--samples", "5", "verify", "verma", "--pair", "2,1", "--variant", "literature"});
  EXPECT_EQ(r.code, kExitPass);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 1U);
  EXPECT_FALSE(j["reports"][0]["passed"].get<bool>());
  EXPECT_TRUE(j["reports"][0]["informational"].get<bool>());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["config"]["variant"], "literature");
  // Replayable: the stored point is complete.
  const auto& p = j["reports"][0]["counterexamples"][0]["point"];
  for (const char* k : {"x0", "x1", "x2", "x3", "x4", "x5", "c1", "c2"}) EXPECT_TRUE(p.contains(k)) << k;
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  const auto a = run({"--seed", "3", "verify", "module"});
  const auto b = run({"verify", "module", "--seed", "3"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--samples", "0", "verify", "module"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "verma", "--pair", "1,1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "verma", "--variant", "other"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "lemma51", "--symbolic", "--sampled"}).code, kExitUsage);
  EXPECT_EQ(run({"explore", "--seed-point", "1,2,3"}).code, kExitUsage);
  EXPECT_EQ(run({"explore", "--seed-point", "1,2,x,4,5,6"}).code, kExitUsage);
  EXPECT_EQ(run({"explore", "--radius", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"tropicalize", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"dump-formula", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, TropicalizeGamma2) {
  const auto r = run({"tropicalize", "gamma2"});
  ASSERT_EQ(r.code, kExitPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["vars"], (Json{"x0", "x1", "x2", "x3", "x4", "x5", "c"}));
  ASSERT_EQ(j["coordinates"].size(), 1U);
  const auto& c = j["coordinates"][0];
  EXPECT_EQ(c["name"], "gamma2");
  EXPECT_EQ(c["num"], Json::parse(R"([{"const":0,"grad":[0,0,2,0,2,0,0]}])"));
  EXPECT_EQ(c["den"], Json::parse(R"([{"const":0,"grad":[0,1,0,1,0,1,0]}])"));
  EXPECT_EQ(run({"tropicalize", "gamma2"}).out, r.out);
}

TEST(Cli, TropicalizeOperatorAndText) {
  const auto r = run({"tropicalize", "e0"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(Json::parse(r.out)["coordinates"].size(), 6U);
  const auto t = run({"tropicalize", "eps2", "--format", "text"});
  EXPECT_EQ(t.out, "eps2 = max(x1 + x3, x1 + x2 + x4) - max(2*x2 + x4)\n");
}

TEST(Cli, TropicalizeExpressionFile) {
  const std::string pos = temp_file("pos.json",
      R"({"vars":["x0","x1"],"num":[{"coef":"2","exp":[1,0]},{"coef":"1/3","exp":[0,2]}],"den":[{"coef":"1","exp":[0,0]}]})");
  const auto ok = run({"tropicalize", "--expr", pos});
  ASSERT_EQ(ok.code, kExitPass) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["coordinates"][0]["num"].size(), 2U);
  const std::string neg = temp_file("neg.json",
      R"({"vars":["x0"],"num":[{"coef":"1","exp":[2]},{"coef":"-1","exp":[0]}],"den":[{"coef":"1","exp":[0]}]})");
  EXPECT_EQ(run({"tropicalize", "--expr", neg}).code, kExitPrecondition);
  const std::string bad = temp_file("bad.json", "{not json");
  EXPECT_EQ(run({"tropicalize", "--expr", bad}).code, kExitUsage);
  EXPECT_EQ(run({"tropicalize", "--expr", "/nonexistent/file.json"}).code, kExitUsage);
}

TEST(Cli, Explore) {
  const auto r0 = run({"explore", "--radius", "0"});
  ASSERT_EQ(r0.code, kExitPass);
  EXPECT_EQ(Json::parse(r0.out)["nodes"].size(), 1U);
  const auto r1 = run({"explore", "--radius", "1", "--seed-point", "0,0,0,0,0,0"});
  const Json j = Json::parse(r1.out);
  EXPECT_LE(j["edges"].size(), 12U);
  EXPECT_TRUE(j["eps_consistent"].get<bool>());
  const auto dot = run({"explore", "--radius", "2", "--format", "dot"});
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0U);
  EXPECT_EQ(run({"explore", "--radius", "2", "--format", "dot"}).out, dot.out);
}

TEST(Cli, DumpModuleAndFormula) {
  const auto m = run({"dump-module"});
  ASSERT_EQ(m.code, kExitPass);
  EXPECT_EQ(Json::parse(m.out)["f2"].size(), 15U);
  const auto f = run({"dump-formula", "sigma_y5_printed"});
  ASSERT_EQ(f.code, kExitPass);
  const Json j = Json::parse(f.out);
  EXPECT_EQ(j["name"], "sigma_y5_printed");
  EXPECT_EQ(j["positivity"], "verified_positive");
  EXPECT_TRUE(rf_equal(rational_function_from_json(j), find_formula("sigma_y5_printed")->build()));
  const auto list = run({"dump-formula", "--list"});
  EXPECT_NE(list.out.find("sigma_y5_corrected\n"), std::string::npos);
  EXPECT_EQ(run({"dump-formula", "eps2", "--format", "text"}).out, "eps2 = x1*x2^-1 + x1*x2^-2*x3*x4^-1\n");
}

TEST(Cli, SameConfigSameBytes) {
  const std::vector<std::string> args = {"--samples", "10", "verify", "trop"};
  const auto a = run(args);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  const auto b = run(threaded);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"--samples", "10", "--seed", "1", "verify", "trop"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, ForcedModes) {
  const auto s = run({"--samples", "3", "verify", "lemma51", "--sampled"});
  EXPECT_EQ(s.code, kExitPass);
  for (const auto& rep : Json::parse(s.out)["reports"]) EXPECT_EQ(rep["mode"], "sampled");
  const auto j = Json::parse(s.out);
  EXPECT_EQ(j["config"]["mode"], "sampled");
  const auto& d = j["reports"][0]["details"];
  EXPECT_TRUE(d.contains("degree_bound"));
  EXPECT_TRUE(d.contains("per_sample_false_pass_bound"));
}
