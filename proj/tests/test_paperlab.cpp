#include "g25/paperlab/suite.hpp"

#include <gtest/gtest.h>

using namespace g25;

namespace {

std::string failures(const Checks& cs) {
  std::string s;
  for (const auto& c : cs)
    if (!c.pass) s += c.name + " expected " + c.expected + " got " + c.computed + "\n";
  return s;
}

}  // namespace

TEST(Cusp, VerifyPasses) {
  const auto r = cusp_verify();
  EXPECT_TRUE(all_pass(r)) << failures(r);
  EXPECT_GE(r.size(), 20u);
}

TEST(Cusp, RootsAreReciprocalAndSigmaPaired) {
  const auto pts = cusp_points();
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_LE(abs(pts[0].g * pts[1].g - 1).to_double(), 1e-20);
  const auto s = sigma(pts[0].t0, pts[0].t1, pts[0].t6);
  EXPECT_NEAR(s[0].to_double(), pts[1].t0.to_double(), 1e-9);
  EXPECT_NEAR(s[1].to_double(), pts[1].t1.to_double(), 1e-9);
  EXPECT_NEAR(s[2].to_double(), pts[1].t6.to_double(), 1e-9);
  for (const auto& p : pts) EXPECT_EQ(count_solutions(derive_data(p.t0, p.t1, p.t6)), 1);
}

TEST(Example5, SuitePasses) {
  const auto r = example5_suite();
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Example5, ExactPointChecks) {
  const auto& f = example5_f();
  EXPECT_EQ(f.eval({Rational(1), Rational(1)}), Rational(0));
  const auto [v, grad] = f.eval_and_gradient({Rational(1), Rational(1)});
  EXPECT_EQ(v, Rational(0));
  EXPECT_EQ(grad[1] / grad[0], Rational(2));
  const auto [w, gw] = f.eval_and_gradient({Rational(1), make_rational(-2, 3)});
  EXPECT_EQ(w, Rational(0));
  EXPECT_EQ(gw[0], Rational(0));
  EXPECT_EQ(gw[1], Rational(0));
}

TEST(ErrorBound, Examples) {
  EXPECT_EQ(error_bound(4, 6, 3, 5, 0.0, 0.1475, 8.0 / 15), 0.0);
  const double b = error_bound(4, 6, 3, 5, 1e-20, 0.1475, 8.0 / 15);
  EXPECT_GE(b, 1e-18);
  EXPECT_LT(b, 1e-16);
  for (double h : {1e-20, 1e-16, 1e-12, 1e-8}) EXPECT_GE(error_bound(4, 6, 3, 5, 2 * h, 0.1475, 8.0 / 15), 2 * error_bound(4, 6, 3, 5, h, 0.1475, 8.0 / 15));
  EXPECT_DOUBLE_EQ(error_bound(4, 6, 3, 5, 1e-12, 0.1475, 8.0 / 15, 3.0), 3 * error_bound(4, 6, 3, 5, 1e-12, 0.1475, 8.0 / 15));
}

TEST(ErrorBound, Preconditions) {
  EXPECT_THROW(error_bound(4, 6, 3, 5, 0.2, 0.1475, 8.0 / 15), argument_error);
  EXPECT_THROW(error_bound(4, 6, 3, 5, 1e-10, 0.0, 8.0 / 15), argument_error);
  EXPECT_THROW(error_bound(4, 6, 3, 5, 1e-10, 0.1, -1.0), argument_error);
  EXPECT_THROW(error_bound(4, 6, 3, 5, -1e-10, 0.1, 1.0), argument_error);
}

TEST(Digests, TranscriptionsArePinned) {
  const auto d = suite_digests();
  EXPECT_EQ(d.size(), pinned_digests().size());
  EXPECT_TRUE(all_pass(d)) << failures(d);
}

TEST(Digests, CoefficientChangeIsDetected) {
  MultiPoly p = f_polynomial();
  p.add_term({1, 0, 0}, Rational(1));
  EXPECT_NE(poly_digest(p), pinned_digests().at("F"));
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Suite, SixteenGroupsInCriterionOrder) {
  const auto& g = suite_groups();
  ASSERT_EQ(g.size(), 16u);
  EXPECT_EQ(g.front().name, "standard_curve");
  EXPECT_EQ(g[5].name, "w_functional");
  EXPECT_EQ(g.back().name, "second_ff");
}

TEST(Suite, ExceptionBecomesFailingCheck) {
  const SuiteGroup bad{"boom", [](int) -> Checks { throw numeric_error("nope"); }};
  const auto r = run_group(bad, kFloatBits);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].pass);
  EXPECT_EQ(r[0].name, "boom.exception");
}

TEST(Suite, QuickGroupsPass) {
  for (const auto& g : suite_groups()) {
    if (g.name == "eg_cusp" || g.name == "example5" || g.name == "ramification") continue;
    const auto r = run_group(g, kFloatBits);
    EXPECT_TRUE(all_pass(r)) << g.name << "\n" << failures(r);
  }
}

TEST(Report, CheckJson) {
  const auto j = to_json(close_check("x", 1.0, 1.0 + 1e-9, 1e-8));
  EXPECT_EQ(j["check_name"], "x");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["tolerance"].get<double>(), 1e-8);
  EXPECT_EQ(j["expected"], "1");
  EXPECT_FALSE(bound_check("y", 1e-10, 1e-9).pass);
  EXPECT_FALSE(exact_check("z", Rational(1), Rational(2)).pass);
}
