#include "g25/grassmann/genericity.hpp"
#include "g25/grassmann/io.hpp"
#include "g25/moduli/generators.hpp"
#include "g25/moduli/solve.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace g25;

namespace {

PencilCurve<Qx> standard_pencil() {
  const Qx r6 = Qx::sqrt_or_throw(6);
  auto m = [](const Qx& c, int k) { return UniPoly<Qx>::monomial(c, k); };
  PencilCurve<Qx> pc;
  pc.rows[0] = {m(Qx(1), 0), UniPoly<Qx>(), m(-r6, 2), m(Qx(-4), 3), m(Qx(-3), 4)};
  pc.rows[1] = {UniPoly<Qx>(), m(Qx(1), 0), m(r6, 1), m(Qx(3), 2), m(Qx(2), 3)};
  return pc;
}

PlueckerCurve<BigComplex> to_float(const PlueckerCurve<Qx>& F, int bits = kFloatBits) {
  return F.map([&](const Qx& x) { return x.to_complex(bits); });
}

std::vector<Qx> random_open_omega(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  while (true) {
    GroupElement<Qx> g{Qx(d(rng)), Qx(d(rng)), Qx(d(rng)), Qx(d(rng))};
    if (g.det().is_zero()) continue;
    auto w = orbit_to_omega(orbit_point(g, Orbit::open));
    if (!w[0].is_zero() && !w[6].is_zero()) return w;
  }
}

Matrix<Qx> permutation(const std::array<int, 5>& p) {
  Matrix<Qx> m(5, 5, Qx(0));
  for (int i = 0; i < 5; ++i) m(p[i], i) = Qx(1);
  return m;
}

}  // namespace

TEST(Wedge, StandardPencil) {
  const auto F = wedge_pencil(standard_pencil());
  const Qx r6 = Qx::sqrt_or_throw(6);
  const std::array<Qx, 10> c{Qx(1), r6, Qx(3), Qx(2), r6, Qx(4), Qx(3), r6, r6, Qx(1)};
  EXPECT_TRUE(F == PlueckerCurve<Qx>::from_monomials(c, {0, 1, 2, 3, 2, 3, 4, 4, 5, 6}));
  EXPECT_EQ(F.degree(), 6);
}

TEST(Wedge, ConstantRowsGiveConstantCurve) {
  PencilCurve<Qx> pc;
  pc.rows[0] = {UniPoly<Qx>(std::vector<Qx>{Qx(1)}), UniPoly<Qx>(), UniPoly<Qx>(), UniPoly<Qx>(std::vector<Qx>{Qx(2)}), UniPoly<Qx>()};
  pc.rows[1] = {UniPoly<Qx>(), UniPoly<Qx>(std::vector<Qx>{Qx(1)}), UniPoly<Qx>(), UniPoly<Qx>(), UniPoly<Qx>()};
  const auto F = wedge_pencil(pc);
  EXPECT_EQ(F.degree(), 0);
  EXPECT_TRUE(in_grassmannian(F));
}

TEST(Wedge, DependentRowsThrow) {
  auto pc = standard_pencil();
  pc.rows[1] = pc.rows[0];
  EXPECT_THROW(wedge_pencil(pc), argument_error);
}

TEST(Pluecker, ResidualsOfDecomposableAndNot) {
  EXPECT_TRUE(in_grassmannian(wedge_pencil(standard_pencil())));
  std::array<Qx, 10> c;
  c.fill(Qx(0));
  c[pair_index(0, 1)] = Qx(1);
  c[pair_index(2, 3)] = Qx(1);
  const auto F = PlueckerCurve<Qx>::from_monomials(c, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_FALSE(in_grassmannian(F));
  EXPECT_EQ(pluecker_residual_max(F).to_double(), 1.0);
  EXPECT_EQ(pluecker_residual_max(to_float(F)).to_double(), 1.0);
}

TEST(Pluecker, RandomIntegerPencilsAreDecomposable) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4), deg(0, 4);
  for (int s = 0; s < 40; ++s) {
    PencilCurve<Qx> pc;
    for (auto& row : pc.rows)
      for (auto& q : row) {
        std::vector<Qx> c;
        for (int k = deg(rng); k >= 0; --k) c.push_back(Qx(d(rng)));
        q = UniPoly<Qx>(c);
      }
    try {
      EXPECT_TRUE(in_grassmannian(wedge_pencil(pc)));
    } catch (const argument_error&) {
    }
  }
}

TEST(Gram, ExactFamilyMemberHasZeroDefect) {
  const auto g = gram_and_defect(wedge_pencil(family33_exact(6).pencil));
  EXPECT_TRUE(g.constant_curvature);
  EXPECT_EQ(g.defect.to_double(), 0.0);
}

TEST(Gram, DoublingTopCoordinateBreaksCurvature) {
  const auto F = wedge_pencil(standard_pencil());
  auto c = F.coords();
  c[pair_index(3, 4)] = c[pair_index(3, 4)] * Qx(2);
  const auto g = gram_and_defect(PlueckerCurve<Qx>(c));
  EXPECT_FALSE(g.constant_curvature);
  EXPECT_EQ(g.defect.to_double(), 3.0);
}

TEST(Gram, RequiresDegreeSix) {
  PencilCurve<Qx> pc;
  pc.rows[0] = {UniPoly<Qx>(std::vector<Qx>{Qx(1)}), UniPoly<Qx>(), UniPoly<Qx>::monomial(Qx(1), 1), UniPoly<Qx>(), UniPoly<Qx>()};
  pc.rows[1] = {UniPoly<Qx>(), UniPoly<Qx>(std::vector<Qx>{Qx(1)}), UniPoly<Qx>(), UniPoly<Qx>(), UniPoly<Qx>()};
  EXPECT_THROW(gram_and_defect(wedge_pencil(pc)), argument_error);
}

TEST(Gram, InvariantUnderExactUnitaries) {
  const auto F = wedge_pencil(standard_pencil());
  const auto g0 = gram_and_defect(F).gram;
  const Qx h = Qx(1) / Qx::sqrt_or_throw(2), i = Qx::imag_unit();
  std::vector<Matrix<Qx>> us{permutation({4, 3, 2, 1, 0}), permutation({1, 0, 3, 2, 4})};
  Matrix<Qx> ph = Matrix<Qx>::identity(5, Qx(1), Qx(0));
  ph(1, 1) = i;
  ph(3, 3) = -i;
  ph(4, 4) = Qx(-1);
  us.push_back(ph);
  Matrix<Qx> had = Matrix<Qx>::identity(5, Qx(1), Qx(0));
  had(0, 0) = h, had(0, 1) = h, had(1, 0) = h, had(1, 1) = -h;
  us.push_back(had);
  for (const auto& u : us) {
    const auto g = gram_and_defect(act_wedge2(u, F));
    EXPECT_TRUE(g.gram == g0);
    EXPECT_TRUE(g.constant_curvature);
  }
}

TEST(Ramification, StandardCurveIsReducible) {
  const auto F = wedge_pencil(standard_pencil());
  EXPECT_TRUE(ramification(F).reducible);
  EXPECT_TRUE(ramification(to_float(F)).reducible);
}

TEST(Ramification, TransversalAndTangentialSupports) {
  std::mt19937 rng(21);
  const std::vector<std::optional<BigComplex>> zero_inf{BigComplex::zero(kFloatBits), std::nullopt}, inf{std::nullopt};
  for (int s = 0; s < 10; ++s) {
    const auto F = transversal(random_open_omega(rng));
    EXPECT_TRUE(support_equals(ramification(F), zero_inf));
    EXPECT_TRUE(support_equals(ramification(to_float(F)), zero_inf));
  }
  for (int s = 0; s < 10; ++s) {
    const auto tau = random_open_omega(rng);
    const auto F = tangential(tau, Qx(s % 2 ? 2 : -3));
    EXPECT_TRUE(support_equals(ramification(F), inf));
  }
}

TEST(Ramification, FamilySupportedAtZeroAndInfinity) {
  const std::vector<std::optional<BigComplex>> zero_inf{BigComplex::zero(kFloatBits), std::nullopt};
  for (int k : {1, 3, 4, 5, 7, 11}) {
    const auto r = ramification(wedge_pencil(family33_exact(k).pencil));
    ASSERT_FALSE(r.reducible) << k;
    for (const auto& p : r.divisor) EXPECT_TRUE(p.at_infinity || abs(p.z) <= BigFloat(1e-30, kFloatBits)) << k;
  }
  const auto f = family33(BigFloat(1.1, kFloatBits));
  for (const auto& p : ramification(wedge_pencil(f.pencil)).divisor)
    EXPECT_TRUE(p.at_infinity || abs(p.z) <= BigFloat(1e-30, kFloatBits));
  (void)zero_inf;
}

TEST(Ramification, RejectsCurvesOffTheGrassmannian) {
  std::array<Qx, 10> c;
  c.fill(Qx(0));
  c[pair_index(0, 1)] = Qx(1);
  c[pair_index(2, 3)] = Qx(1);
  EXPECT_THROW(ramification(PlueckerCurve<Qx>::from_monomials(c, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0})), contract_violation);
}

TEST(Tangential, NotConstantCurvature) {
  std::mt19937 rng(23);
  for (int s = 0; s < 50; ++s) {
    const auto tau = random_open_omega(rng);
    const auto F = tangential(tau, Qx(1 + s % 5));
    if (F.degree() != 6) continue;
    EXPECT_GT(gram_and_defect(F).defect.to_double(), 1e-3) << s;
  }
}

TEST(Jp, StandardParameterization) {
  const auto r = jp_checks(standard_pencil());
  EXPECT_FALSE(r.nonsingular);
  for (const auto& x : r.residuals) EXPECT_LE(x.to_double(), 1e-50);
  auto pc = standard_pencil();
  pc.rows[1][2] = UniPoly<Qx>::monomial(Qx(2), 1);
  EXPECT_NEAR(jp_checks(pc).residuals[0].to_double(), 2.0, 1e-50);
}

TEST(Jp, FamilySatisfiesNormEquations) {
  const auto f = family33(BigFloat::pi(kFloatBits) / 4);
  const auto r = jp_checks(f.pencil);
  EXPECT_FALSE(r.nonsingular);
  for (const auto& x : r.residuals) EXPECT_LE(x.to_double(), 1e-40);
}

TEST(Jp, RejectsNonStandardPencil) {
  auto pc = standard_pencil();
  pc.rows[0][2] = UniPoly<Qx>(std::vector<Qx>{Qx(1), Qx(1), Qx(1)});
  EXPECT_THROW(jp_checks(pc), argument_error);
}

TEST(SecondFF, ConstantOnStandardCurve) {
  const auto F = wedge_pencil(standard_pencil());
  for (double x : {0.0, 0.3, -1.2, 5.0})
    EXPECT_NEAR(second_ff_norm(F, BigComplex(x, 0.7 * x, kFloatBits)).to_double(), 20.0 / 3, 1e-12);
}

TEST(SecondFF, VariesAlongFamily) {
  const auto F = wedge_pencil(family33(BigFloat::pi(kFloatBits) / 12).pencil);
  const double a = second_ff_norm(F, BigComplex(0, 0, kFloatBits)).to_double();
  const double b = second_ff_norm(F, BigComplex(1, 0, kFloatBits)).to_double();
  EXPECT_GT(std::abs(a - b), 1e-3);
}

TEST(SecondFF, RequiresCertifiedCurve) {
  std::mt19937 rng(24);
  const auto F = tangential(random_open_omega(rng), Qx(2));
  EXPECT_THROW(second_ff_norm(F, BigComplex(0, 0, kFloatBits)), contract_violation);
}

TEST(WFunctional, StandardAndRmk) {
  const auto st = wedge_pencil(standard_pencil());
  EXPECT_NEAR(w_numeric(st), 40 * M_PI, 1e-6 * 40 * M_PI);
  EXPECT_NEAR(w_moment(st).to_double(), 40 * M_PI, 1e-12);
  const auto rmk = construct_curve(Rational(1), make_rational(1, 16), make_rational(1, 4096));
  EXPECT_NEAR(w_numeric(rmk.curve), 184 * M_PI / 7, 1e-6 * 184 * M_PI / 7);
  EXPECT_NEAR(w_moment(rmk.curve).to_double(), 184 * M_PI / 7, 1e-12);
}

TEST(WFunctional, InvariantUnderParameterInversion) {
  for (double th : {0.4, 1.3, 2.9}) {
    const auto F = wedge_pencil(family33(BigFloat(th, kFloatBits)).pencil);
    EXPECT_NEAR(w_numeric(F), w_numeric(invert_parameter(F)), 1e-7);
    EXPECT_NEAR(w_moment(F).to_double(), w_numeric(F), 1e-6);
  }
}

TEST(Genericity, DualSystemIsGeneric) {
  const auto ds = dual_system(Qx(1));
  const auto r = center_genericity(ds[0], ds[1], ds[2]);
  EXPECT_TRUE(r.generic);
  EXPECT_TRUE(r.exact);
  const auto df = dual_system(BigComplex::one(kFloatBits));
  const auto rf = center_genericity(df[0], df[1], df[2]);
  EXPECT_TRUE(rf.generic);
  EXPECT_FALSE(rf.exact);
}

TEST(Genericity, DegenerateTripleHasWitness) {
  std::array<SkewTensor<Qx>, 3> t;
  for (auto& s : t) s.p.fill(Qx(0));
  t[0].p[pair_index(0, 1)] = Qx(1);
  t[1].p[pair_index(0, 2)] = Qx(1);
  t[2].p[pair_index(0, 3)] = Qx(1);
  const auto r = center_genericity(t[0], t[1], t[2]);
  EXPECT_FALSE(r.generic);
  ASSERT_TRUE(r.witness);
  const auto q = center_map(t[0], t[1], t[2]);
  bool nonzero = false;
  for (const auto& x : *r.witness) nonzero = nonzero || !x.is_zero();
  EXPECT_TRUE(nonzero);
  for (const auto& f : q) EXPECT_TRUE(f.eval(*r.witness).is_zero());
}

TEST(Genericity, RandomTriplesAreGeneric) {
  std::mt19937 rng(25);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int s = 0; s < 5; ++s) {
    std::array<SkewTensor<Qx>, 3> t;
    for (auto& x : t)
      for (auto& c : x.p) c = Qx(d(rng));
    EXPECT_TRUE(center_genericity(t[0], t[1], t[2]).generic);
  }
}

TEST(Genericity, DependentTripleThrows) {
  const auto ds = dual_system(Qx(1));
  EXPECT_THROW(center_genericity(ds[0], ds[1], ds[0]), argument_error);
}

TEST(Io, PencilRoundTrip) {
  const auto f = family33(BigFloat(0.7, kFloatBits));
  const auto back = pencil_from_json(to_json(f.pencil));
  EXPECT_TRUE(projectively_same(wedge_pencil(back), wedge_pencil(f.pencil), 1e-14));
  EXPECT_THROW(pencil_from_json(nlohmann::json{{"rows", "nope"}}), argument_error);
}

TEST(Certificate, JsonFields) {
  const auto cc = construct_curve(Rational(1), Rational(1), Rational(1), 0, true);
  const auto j = to_json(cc.certificate);
  for (const char* k : {"plucker_residual_max", "gram", "gram_defect", "in_grassmannian", "constant_curvature",
                        "reducible", "ramified", "w_closed", "w_numeric", "tolerance", "precision_bits", "exact"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j["exact"].get<bool>());
  EXPECT_TRUE(j["reducible"].get<bool>());
  EXPECT_NEAR(j["w_numeric"].get<double>(), 40 * M_PI, 1e-5);
}
