#include <json.hpp>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path p = fs::temp_directory_path() / ("g25cli_" + std::string(info->test_suite_name()) + "_" + info->name());
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string(G25CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST(Construct, StandardCurve) {
  const auto out = scratch() / "std.json";
  ASSERT_EQ(run("construct --t 1,1,1 --out " + out.string()), 0);
  const auto j = load(out);
  EXPECT_TRUE(j["certificate"]["constant_curvature"].get<bool>());
  EXPECT_TRUE(j["certificate"]["reducible"].get<bool>());
  EXPECT_EQ(j["count"].get<int>(), 1);
  EXPECT_EQ(j["exact_pencil"]["rows"].size(), 2u);
  EXPECT_EQ(j["pluecker"]["degree"].get<int>(), 6);
}

TEST(Construct, FamilyNearPi) {
  const auto out = scratch() / "f.json";
  ASSERT_EQ(run("construct --family33 3.14159265 --out " + out.string()), 0);
  EXPECT_LE(load(out)["certificate"]["gram_defect"].get<double>(), 1e-8);
}

TEST(Construct, InfeasibleExitsTwo) {
  const auto out = scratch() / "bad.json";
  EXPECT_EQ(run("construct --t 1,1,100 --out " + out.string()), 2);
  const auto j = load(out);
  EXPECT_EQ(j["error"], "infeasible");
  EXPECT_FALSE(j["F_zero"].get<bool>());
}

TEST(Construct, ParseErrorsExitOne) {
  EXPECT_EQ(run("construct --t 1,x,1"), 1);
  EXPECT_EQ(run("construct --t 1,1"), 1);
  EXPECT_EQ(run("construct --bogus"), 1);
  EXPECT_EQ(run("construct"), 1);
  EXPECT_EQ(run("construct --t 1,1,1 --precision 8"), 1);
  EXPECT_EQ(run("nosuchcommand"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Construct, OutputIsDeterministic) {
  const auto d = scratch();
  ASSERT_EQ(run("construct --t 11/6,1331/864,19487171/17915904 --branch 1 --out " + (d / "a.json").string()), 0);
  ASSERT_EQ(run("construct --t 11/6,1331/864,19487171/17915904 --branch 1 --out " + (d / "b.json").string()), 0);
  EXPECT_EQ(slurp(d / "a.json"), slurp(d / "b.json"));
}

TEST(Certify, RoundTripOfConstructedPencil) {
  const auto d = scratch();
  ASSERT_EQ(run("construct --t 1,1/16,1/4096 --out " + (d / "c.json").string()), 0);
  ASSERT_EQ(run("certify --in " + (d / "c.json").string() + " --out " + (d / "cert.json").string()), 0);
  const auto j = load(d / "cert.json");
  EXPECT_TRUE(j["certificate"]["in_grassmannian"].get<bool>());
  EXPECT_TRUE(j["certificate"]["constant_curvature"].get<bool>());
}

TEST(Certify, NonConstantCurvatureExitsThree) {
  const auto d = scratch();
  std::ofstream(d / "p.json") << R"({"rows": [[[1], [], [0, 0, 1], [], []], [[], [1], [], [0, 0, 0, 1], []]]})";
  EXPECT_EQ(run("certify --in " + (d / "p.json").string()), 3);
  std::ofstream(d / "junk.json") << "{not json";
  EXPECT_EQ(run("certify --in " + (d / "junk.json").string()), 1);
  EXPECT_EQ(run("certify --in " + (d / "missing.json").string()), 1);
}

TEST(Scan, CsvHeaderAndRows) {
  const auto out = scratch() / "s.csv";
  ASSERT_EQ(run("scan --g 1 --t0-range 1:11/6:6 --out " + out.string()), 0);
  const std::string s = slurp(out);
  EXPECT_EQ(s.substr(0, s.find('\n')), "t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi");
  EXPECT_GT(std::count(s.begin(), s.end(), '\n'), 10);
}

TEST(Scan, JsonAndDat) {
  const auto d = scratch();
  ASSERT_EQ(run("scan --g 2 --t0-range 1/2:2:4 --format json --out " + (d / "s.json").string()), 0);
  for (const auto& s : load(d / "s.json")) EXPECT_TRUE(s["in_S"].get<bool>());
  ASSERT_EQ(run("scan --g 2 --t0-range 1/2:2:4 --format dat --out " + (d / "s.dat").string()), 0);
  EXPECT_EQ(slurp(d / "s.dat").rfind("# t0", 0), 0u);
  EXPECT_EQ(run("scan --g 2 --t0-range 1/2:2:4 --format xml"), 1);
  EXPECT_EQ(run("scan --g 2"), 1);
}

TEST(LevelSet, Endpoints) {
  const auto out = scratch() / "l.json";
  ASSERT_EQ(run("levelset --s 11/6 --out " + out.string()), 0);
  const auto j = load(out);
  EXPECT_EQ(j[0]["F1"], "1331/864");
  EXPECT_EQ(j[0]["F2"], "1331/864");
  EXPECT_EQ(run("levelset --s 3"), 1);
}

TEST(Functional, ClosedAndNumeric) {
  const auto out = scratch() / "w.json";
  ASSERT_EQ(run("functional --t 1,1,1 --quadrature --out " + out.string()), 0);
  const auto j = load(out);
  EXPECT_EQ(j["W_over_pi"], "40");
  EXPECT_NEAR(j["W_numeric"].get<double>(), 40 * M_PI, 1e-6 * 40 * M_PI);
  EXPECT_NEAR(j["W_moment"].get<double>(), 40 * M_PI, 1e-12);
  const auto rmk = scratch() / "r.json";
  ASSERT_EQ(run("functional --t 1,1/16,1/4096 --out " + rmk.string()), 0);
  EXPECT_EQ(load(rmk)["W_over_pi"], "184/7");
}

TEST(VerifyPaper, OnlyGroups) {
  const auto out = scratch() / "v.json";
  ASSERT_EQ(run("verify-paper --only w_functional --out " + out.string()), 0);
  const auto j = load(out);
  ASSERT_FALSE(j.empty());
  for (const auto& c : j) {
    EXPECT_EQ(c["check_name"].get<std::string>().rfind("w_functional.", 0), 0u);
    EXPECT_TRUE(c["pass"].get<bool>());
    for (const char* k : {"expected", "computed", "tolerance"}) EXPECT_TRUE(c.contains(k));
  }
  EXPECT_EQ(run("verify-paper --only nosuchgroup"), 1);
}

TEST(VerifyPaper, PrecisionDoesNotChangeVerdicts) {
  const auto d = scratch();
  const std::string groups = "digests,standard_curve,rmk,eg_exact,levelset,family33,genericity";
  ASSERT_EQ(run("verify-paper --only " + groups + " --precision 128 --out " + (d / "a.json").string()), 0);
  ASSERT_EQ(run("verify-paper --only " + groups + " --precision 256 --out " + (d / "b.json").string()), 0);
  const auto a = load(d / "a.json"), b = load(d / "b.json");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i]["check_name"], b[i]["check_name"]);
    EXPECT_EQ(a[i]["pass"], b[i]["pass"]) << a[i]["check_name"];
  }
}
