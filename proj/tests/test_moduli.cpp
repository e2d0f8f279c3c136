#include "g25/moduli/generators.hpp"
#include "g25/moduli/levelset.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace g25;

namespace {

const Rational kEgT0 = make_rational(11, 6), kEgT1 = make_rational(1331, 864), kEgT6 = make_rational(19487171, 17915904);

Rational random_positive(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(1, 40), m(1, 15);
  return make_rational(n(rng), m(rng));
}

PencilCurve<Qx> pencil(std::initializer_list<std::pair<Qx, int>> r0, std::initializer_list<std::pair<Qx, int>> r1) {
  PencilCurve<Qx> pc;
  int j = 0;
  for (const auto& [c, k] : r0) pc.rows[0][j++] = UniPoly<Qx>::monomial(c, k);
  j = 0;
  for (const auto& [c, k] : r1) pc.rows[1][j++] = UniPoly<Qx>::monomial(c, k);
  return pc;
}

bool same_pencil(const PencilCurve<Qx>& a, const PencilCurve<Qx>& b) {
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 5; ++j)
      if (!(chop(a.rows[r][j]) == chop(b.rows[r][j]))) return false;
  return true;
}

}  // namespace

TEST(DeriveData, StandardPoint) {
  const auto mp = derive_data(Rational(1), Rational(1), Rational(1));
  for (int i = 2; i <= 5; ++i) EXPECT_EQ(mp.exact->t[i], Rational(1));
  const auto xyz = exact_xyz(mp);
  ASSERT_TRUE(xyz);
  EXPECT_EQ((*xyz)[0], Rational(2));
  EXPECT_EQ((*xyz)[1], Rational(2));
  EXPECT_EQ((*xyz)[2], Rational(2));
  EXPECT_EQ(mp.exact->H, Rational(0));
}

TEST(DeriveData, RmkPoint) {
  const auto mp = derive_data(Rational(1), make_rational(1, 16), make_rational(1, 4096));
  const auto xyz = exact_xyz(mp);
  ASSERT_TRUE(xyz);
  EXPECT_EQ((*xyz)[0], Rational(2));
  EXPECT_EQ((*xyz)[1], Rational(2));
  EXPECT_EQ((*xyz)[2], Rational(2));
  EXPECT_EQ(mp.exact->g, Rational(1));
}

TEST(DeriveData, ExactExample) {
  const auto mp = derive_data(kEgT0, kEgT1, kEgT6);
  EXPECT_EQ(mp.exact->t[2], make_rational(14641, 7776));
  EXPECT_EQ(mp.exact->X2, make_rational(125, 33));
  EXPECT_EQ(mp.exact->Y2, make_rational(125, 33));
  EXPECT_EQ(mp.exact->Z2, Rational(4));
  EXPECT_GT(mp.Z.to_double(), 0);
}

TEST(DeriveData, RejectsNonPositive) {
  EXPECT_THROW(derive_data(Rational(0), Rational(1), Rational(1)), argument_error);
  EXPECT_THROW(derive_data(Rational(1), Rational(-1), Rational(1)), argument_error);
  EXPECT_THROW(f_value(Rational(1), Rational(1), Rational(0)), argument_error);
}

TEST(FValue, Examples) {
  EXPECT_EQ(f_value(Rational(1), make_rational(1, 2), make_rational(1, 8)).explicit_value, Rational(0));
  EXPECT_EQ(f_value(Rational(1), Rational(1), Rational(1)).explicit_value, Rational(0));
}

TEST(FValue, ExplicitEqualsDerivedOnRandomPoints) {
  std::mt19937 rng(31);
  for (int s = 0; s < 100; ++s) {
    const auto v = f_value(random_positive(rng), random_positive(rng), random_positive(rng));
    EXPECT_EQ(v.explicit_value, v.derived_value);
  }
  EXPECT_TRUE(f_identity_holds());
}

TEST(Feasibility, Examples) {
  const auto a = feasibility(derive_data(Rational(1), Rational(1), Rational(1)));
  for (const auto& s : a.slacks) EXPECT_EQ(s.to_double(), 0.0);
  EXPECT_NEAR(a.Q.to_double(), 2.0, 1e-50);
  EXPECT_TRUE(a.in_S);
  const auto mp = derive_data(kEgT0, kEgT1, kEgT6);
  const auto b = feasibility(mp);
  EXPECT_TRUE(b.in_S);
  for (const auto& s : mp.exact->slack) EXPECT_LE(s, Rational(0));
  EXPECT_EQ(mp.exact->slack[2], Rational(0));
  EXPECT_FALSE(feasibility(derive_data(Rational(1), Rational(1), Rational(100))).in_S);
}

TEST(Sigma, FixedPointAndInvolution) {
  const auto s = sigma(Rational(1), Rational(1), Rational(1));
  EXPECT_EQ(s, (std::array<Rational, 3>{1, 1, 1}));
  std::mt19937 rng(32);
  for (int k = 0; k < 100; ++k) {
    const Rational t0 = random_positive(rng), t1 = random_positive(rng), t6 = random_positive(rng);
    const auto a = sigma(t0, t1, t6);
    const auto b = sigma(a[0], a[1], a[2]);
    EXPECT_EQ(b, (std::array<Rational, 3>{t0, t1, t6}));
    EXPECT_EQ(g_of(a[0], a[1], a[2]), Rational(1) / g_of(t0, t1, t6));
    EXPECT_EQ(f_polynomial().eval({a[0], a[1], a[2]}), rpow(g_of(t0, t1, t6), 21) * f_polynomial().eval({t0, t1, t6}));
  }
}

TEST(Sigma, ZAndYQRelations) {
  std::mt19937 rng(33);
  for (int k = 0; k < 100; ++k) {
    const Rational t0 = random_positive(rng), t1 = random_positive(rng), t6 = random_positive(rng);
    const auto a = sigma(t0, t1, t6);
    const auto d = derive_fields(t0, t1, t6), e = derive_fields(a[0], a[1], a[2]);
    EXPECT_EQ(e.Z2, d.Z2);
    EXPECT_EQ(e.Y2, d.Q2);
  }
}

TEST(SolveUvw, Examples) {
  const auto one = solve_uvw(derive_data(Rational(1), Rational(1), Rational(1)));
  ASSERT_EQ(one.size(), 1u);
  for (const auto& z : {one[0].u, one[0].v, one[0].w}) EXPECT_LE(abs(z - BigComplex::one(kFloatBits)).to_double(), 1e-50);

  const auto mp = derive_data(kEgT0, kEgT1, kEgT6);
  const auto two = solve_uvw(mp);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& b : two) {
    EXPECT_LE(abs(b.w - BigComplex::one(kFloatBits)).to_double(), 1e-30);
    EXPECT_LE(abs(b.u - b.v).to_double(), 1e-30);
    EXPECT_NEAR(b.u.re.to_double(), mp.X.to_double() / 2, 1e-30);
    EXPECT_NEAR(abs(b.u).to_double(), 1.0, 1e-30);
  }
  EXPECT_LE(abs(conj(two[0].u) - two[1].u).to_double(), 1e-50);

  auto bad = derive_data(BigFloat(1L, kFloatBits), BigFloat(1L, kFloatBits), BigFloat(1L, kFloatBits));
  bad.X = BigFloat(3L, kFloatBits);
  EXPECT_TRUE(solve_uvw(bad).empty());
}

TEST(ReconstructAngles, StandardAndRmk) {
  const auto mp = derive_data(Rational(1), Rational(1), Rational(1));
  const auto s = reconstruct_angles(mp, solve_uvw(mp)[0]);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(s.theta[i].to_double(), 0.0);
  EXPECT_LE(s.residual.to_double(), 1e-50);
  const auto rmk = derive_data(Rational(1), make_rational(1, 16), make_rational(1, 4096));
  const auto r = reconstruct_angles(rmk, solve_uvw(rmk)[0]);
  EXPECT_LE(r.residual.to_double(), 1e-10);
  for (int i = 1; i <= 5; ++i) {
    const double x = r.theta[i].to_double() / M_PI;
    EXPECT_NEAR(x, std::round(x), 1e-30) << i;
  }
}

TEST(ReconstructAngles, BlueSegmentCertifies) {
  for (double th : {0.5, 1.0, 2.0, 3.0}) {
    const BigFloat one(1L, kFloatBits), t1 = (-cos(BigFloat(th, kFloatBits)) * 3 + 5) / (cos(BigFloat(th, kFloatBits)) * 12 + 20);
    const auto mp = derive_data(one, t1, pow(t1, 3));
    const auto tr = solve_uvw(mp);
    ASSERT_EQ(tr.size(), 2u);
    for (const auto& b : tr) EXPECT_LE(reconstruct_angles(mp, b).residual.to_double(), 1e-10);
    for (int branch : {0, 1}) {
      const auto cc = construct_curve(mp, branch);
      EXPECT_LE(cc.certificate.gram_defect, 1e-10);
      EXPECT_TRUE(cc.certificate.in_grassmannian);
    }
  }
}

TEST(ConstructCurve, Examples) {
  const auto st = construct_curve(Rational(1), Rational(1), Rational(1));
  const Qx r6 = Qx::sqrt_or_throw(6);
  ASSERT_TRUE(st.exact_pencil);
  EXPECT_TRUE(same_pencil(*st.exact_pencil, pencil({{Qx(1), 0}, {Qx(0), 0}, {-r6, 2}, {Qx(-4), 3}, {Qx(-3), 4}},
                                                   {{Qx(0), 0}, {Qx(1), 0}, {r6, 1}, {Qx(3), 2}, {Qx(2), 3}})));
  EXPECT_TRUE(st.certificate.reducible);
  EXPECT_TRUE(st.certificate.exact);

  const auto rmk = construct_curve(Rational(1), make_rational(1, 16), make_rational(1, 4096));
  EXPECT_LE(rmk.certificate.gram_defect, 1e-10);
  EXPECT_LE(rmk.certificate.plucker_residual_max, 1e-12);

  const auto b0 = construct_curve(kEgT0, kEgT1, kEgT6, 0), b1 = construct_curve(kEgT0, kEgT1, kEgT6, 1);
  EXPECT_FALSE(projectively_same(b0.curve, b1.curve));
  for (int k = 0; k < 10; ++k)
    for (int i = 0; i <= b0.curve[k].degree(); ++i) EXPECT_LE(abs(conj(b0.curve[k][i]) - b1.curve[k][i]).to_double(), 1e-30);
}

TEST(ConstructCurve, Errors) {
  EXPECT_THROW(construct_curve(Rational(1), Rational(1), Rational(100)), feasibility_error);
  EXPECT_THROW(construct_curve(Rational(1), Rational(1), Rational(1), 1), argument_error);
}

TEST(CountSolutions, Examples) {
  EXPECT_EQ(count_solutions(Rational(1), Rational(1), Rational(1)), 1);
  EXPECT_EQ(count_solutions(Rational(1), make_rational(1, 16), make_rational(1, 4096)), 1);
  EXPECT_EQ(count_solutions(kEgT0, kEgT1, kEgT6), 2);
  EXPECT_EQ(count_solutions(Rational(1), Rational(1), Rational(100)), 0);
}

TEST(TauChart, Examples) {
  const auto c = tau_chart(Rational(1), Rational(1), Rational(1));
  EXPECT_EQ(c.squares, (std::array<Rational, 3>{1, 1, 1}));
  std::mt19937 rng(34);
  for (int k = 0; k < 100; ++k) {
    const Rational t0 = random_positive(rng), t1 = random_positive(rng), t6 = random_positive(rng);
    const auto sq = tau_chart(t0, t1, t6).squares;
    EXPECT_EQ(tau_inverse(sq), (std::array<Rational, 3>{t0, t1, t6}));
    const auto s = sigma(t0, t1, t6);
    const auto ss = tau_chart(s[0], s[1], s[2]).squares;
    EXPECT_EQ(ss, (std::array<Rational, 3>{sq[2], sq[1], sq[0]}));
  }
}

TEST(LevelSet, ClosedFormEndpoints) {
  const auto e = level_set_s1(make_rational(11, 6));
  EXPECT_EQ(*e.F1_exact, make_rational(1331, 864));
  EXPECT_EQ(*e.F2_exact, make_rational(1331, 864));
  const auto b = level_set_s1(Rational(1));
  EXPECT_EQ(*b.F1_exact, Rational(1));
  EXPECT_EQ(*b.F2_exact, make_rational(1, 16));
}

TEST(LevelSet, BranchesLieOnHypersurface) {
  for (int k = 0; k <= 20; ++k) {
    const auto br = level_set_s1(Rational(1) + make_rational(5 * k, 6 * 20));
    EXPECT_LE(br.residual1.to_double(), 1e-30);
    EXPECT_LE(br.residual2.to_double(), 1e-30);
  }
  EXPECT_TRUE(s1_factorization().ok);
}

TEST(LevelSet, RejectsOutOfRange) {
  EXPECT_THROW(level_set_s1(make_rational(1, 2)), argument_error);
  EXPECT_THROW(level_set_s1(Rational(2)), argument_error);
}

TEST(WClosed, Examples) {
  EXPECT_EQ(w_closed_over_pi(Rational(1), Rational(1), Rational(1)), Rational(40));
  EXPECT_EQ(w_closed_over_pi(Rational(1), make_rational(1, 16), Rational(1)), make_rational(184, 7));
  EXPECT_NEAR(w_closed(1, 1, 1), 40 * M_PI, 1e-12);
}

TEST(WClosed, SigmaInvariantOnScanSamples) {
  int n = 0;
  for (const Rational& g : {Rational(2), Rational(3), make_rational(1, 2), make_rational(1, 3)}) {
    for (const auto& s : scan(g, make_rational(1, 2), Rational(3), 12)) {
      const BigFloat t0(s.t0, kFloatBits), inv = BigFloat(1L, kFloatBits) / s.g;
      const auto a = w_closed_over_pi(t0, s.t1, s.g), b = w_closed_over_pi(t0 * s.g, s.t1 * s.g, inv);
      EXPECT_LE((abs(a - b) / abs(a)).to_double(), 1e-10);
      ++n;
    }
  }
  EXPECT_GE(n, 20);
}

TEST(Generators, FamilyEndpoints) {
  const Qx r6 = Qx::sqrt_or_throw(6);
  EXPECT_TRUE(same_pencil(family33_exact(12).pencil, pencil({{Qx(1), 0}, {Qx(0), 0}, {-r6, 2}, {Qx(-4), 3}, {Qx(-3), 4}},
                                                            {{Qx(0), 0}, {Qx(1), 0}, {r6, 1}, {Qx(3), 2}, {Qx(2), 3}})));
  EXPECT_TRUE(same_pencil(family33_exact(0).pencil, pencil({{Qx(1), 0}, {Qx(0), 0}, {-r6, 2}, {Qx(-2), 3}, {Qx(-3), 4}},
                                                           {{Qx(0), 0}, {Qx(1), 0}, {r6, 1}, {Qx(3), 2}, {Qx(4), 3}})));
  EXPECT_EQ(*family33_exact(12).t1_exact, Rational(1));
  EXPECT_EQ(*family33_exact(0).t1_exact, make_rational(1, 16));
}

TEST(Generators, FamilyModuliMatchConstruction) {
  const auto f = family33(BigFloat(1.7, kFloatBits));
  const auto mp = derive_data(f.t0, f.t1, pow(f.t1, 3) / f.g);
  EXPECT_TRUE(feasibility(mp).in_S);
  EXPECT_EQ(count_solutions(mp), 2);
}

TEST(Generators, TangentialDevelopableHasOnePoint) {
  const auto tau = orbit_to_omega(orbit_point(GroupElement<Qx>::identity(Qx(1)), Orbit::u5v));
  const auto r = ramification(tangential(tau, Qx(1)));
  EXPECT_TRUE(support_equals(r, {std::nullopt}));
}

TEST(Generators, ConstraintViolationThrows) {
  const std::vector<Qx> bad{Qx(1), Qx(0), Qx(0), Qx(0), Qx(0), Qx(0), Qx(1)};
  EXPECT_THROW(transversal(bad), argument_error);
  EXPECT_THROW(tangential(bad, Qx(1)), argument_error);
  const auto ok = orbit_to_omega(orbit_point(GroupElement<Qx>{1, 0, 1, 1}, Orbit::open));
  EXPECT_THROW(tangential(ok, Qx(0)), argument_error);
  EXPECT_THROW(transversal(std::vector<Qx>{Qx(1)}), argument_error);
}

TEST(PerturbedResidual, Examples) {
  const auto w = orbit_to_omega(orbit_point(GroupElement<Qx>{1, 0, 1, 1}, Orbit::open));
  for (const auto& r : perturbed_residual(w)) EXPECT_TRUE(r.is_zero());
  const auto u = orbit_to_omega(orbit_point(GroupElement<Qx>::identity(Qx(1)), Orbit::u5v));
  for (const auto& r : perturbed_residual(u)) EXPECT_TRUE(r.is_zero());
  const auto r = perturbed_residual(std::vector<Qx>{Qx(1), Qx(0), Qx(0), Qx(0), Qx(0), Qx(0), Qx(1)});
  EXPECT_EQ(r[2], Qx(1));
  for (int i : {0, 1, 3, 4}) EXPECT_TRUE(r[i].is_zero());
}

TEST(Scan, Examples) {
  std::vector<ScanSample> row;
  for (const auto& s : scan(Rational(1), Rational(1), make_rational(11, 6), 6))
    if (s.t0 == make_rational(11, 6)) row.push_back(s);
  ASSERT_EQ(row.size(), 1u);
  EXPECT_NEAR(row[0].t1.to_double(), 1331.0 / 864, 1e-12);
  EXPECT_TRUE(scan(make_rational(1475, 10000), make_rational(8, 15), make_rational(8, 15), 2).empty());
  EXPECT_THROW(scan(Rational(1), Rational(1), Rational(2), 1), argument_error);
}

TEST(Scan, CsvHeaderAndDeterminism) {
  const auto a = scan(Rational(2), make_rational(1, 2), Rational(2), 5), b = scan(Rational(2), make_rational(1, 2), Rational(2), 5);
  std::ostringstream x, y;
  write_csv(x, a);
  write_csv(y, b);
  EXPECT_EQ(x.str(), y.str());
  EXPECT_EQ(x.str().substr(0, x.str().find('\n')), "t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi");
}

TEST(Properties, ConjugateBranchesShareW) {
  int n = 0;
  std::vector<ScanSample> samples = scan(Rational(2), make_rational(1, 2), Rational(3), 6);
  for (const auto& s : scan(make_rational(1, 2), make_rational(1, 2), Rational(3), 6)) samples.push_back(s);
  for (const auto& s : samples) {
    if (s.count != 2) continue;
    const BigFloat t0(s.t0, kFloatBits);
    const auto mp = derive_data(t0, s.t1, pow(s.t1, 3) / (t0 * t0 * s.g));
    const auto b0 = construct_curve(mp, 0), b1 = construct_curve(mp, 1);
    const double w0 = w_moment(b0.curve).to_double(), w1 = w_moment(b1.curve).to_double();
    EXPECT_LE(std::abs(w0 - w1) / std::abs(w0), 1e-8);
    for (int k = 0; k < 10; ++k)
      for (int i = 0; i <= b0.curve[k].degree(); ++i)
        EXPECT_LE(abs(conj(b0.curve[k][i]) - b1.curve[k][i]).to_double(), 1e-20);
    ++n;
  }
  EXPECT_GE(n, 3);
}

TEST(Properties, ZInsideForcesXYInside) {
  std::mt19937 rng(35);
  std::uniform_int_distribution<int> num(1, 60), den(1, 20);
  int n = 0, rows = 0;
  const BigFloat four_eps = BigFloat(4L, kFloatBits) + BigFloat(1e-30, kFloatBits);
  while (n < 1000 && rows < 20000) {
    ++rows;
    const Rational t0 = make_rational(num(rng), den(rng)), g = make_rational(num(rng), den(rng));
    const auto p = g_slice(t0, g);
    if (p.is_zero()) continue;
    const auto q = p.shift_down(p.valuation());
    if (q.degree() < 1) continue;
    for (const auto& iv : isolate_roots(q, Rational(0), cauchy_bound(q), make_rational(1, 1000000000000LL))) {
      if (iv.hi <= 0) continue;
      const BigFloat T0(t0, kFloatBits), t1 = detail::polish_root(q, iv, kFloatBits);
      const auto mp = derive_data(T0, t1, pow(t1, 3) / (T0 * T0 * BigFloat(g, kFloatBits)));
      if (mp.Z * mp.Z >= BigFloat(4L, kFloatBits) - BigFloat(1e-20, kFloatBits)) continue;
      EXPECT_LT(mp.X * mp.X, four_eps) << t0.str() << " " << g.str();
      EXPECT_LT(mp.Y * mp.Y, four_eps) << t0.str() << " " << g.str();
      ++n;
    }
  }
  EXPECT_GE(n, 1000);
}
