#include "g25/moduli/generators.hpp"
#include "g25/sl2/orbits.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace g25;

namespace {

// Random rational element of determinant 1.
GroupElement<Qx> random_sl2(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(-9, 9), m(1, 5);
  while (true) {
    const Rational a = make_rational(n(rng), m(rng)), b = make_rational(n(rng), m(rng)), c = make_rational(n(rng), m(rng));
    if (a == 0) continue;
    return {Qx(a), Qx(b), Qx(c), Qx((Rational(1) + b * c) / a)};
  }
}

GroupElement<Qx> random_gl2(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(-9, 9), m(1, 4);
  while (true) {
    GroupElement<Qx> g{Qx(make_rational(n(rng), m(rng))), Qx(make_rational(n(rng), m(rng))),
                       Qx(make_rational(n(rng), m(rng))), Qx(make_rational(n(rng), m(rng)))};
    if (!g.det().is_zero()) return g;
  }
}

Qx pow6(const Qx& x) {
  Qx r(1);
  for (int i = 0; i < 6; ++i) r = r * x;
  return r;
}

}  // namespace

TEST(RepMatrix, IdentityIsIdentity) {
  const auto m = rep_matrix(GroupElement<Qx>::identity(Qx(1)), 6);
  EXPECT_TRUE(m == Matrix<Qx>::identity(7, Qx(1), Qx(0)));
}

TEST(RepMatrix, DiagonalIsProjectivelyPowers) {
  const Qx l(make_rational(3, 2));
  const auto m = rep_matrix(GroupElement<Qx>{l, Qx(0), Qx(0), Qx(1)}, 4);
  std::vector<Qx> diag, expect;
  Qx p(1);
  for (int k = 0; k < 5; ++k) {
    diag.push_back(m(k, k));
    expect.push_back(p);
    p = p * l;
    for (int j = 0; j < 5; ++j)
      if (j != k) {
        EXPECT_TRUE(m(k, j).is_zero());
      }
  }
  EXPECT_TRUE(projectively_equal(diag, expect));
}

TEST(RepMatrix, HomomorphismOnRandomPairs) {
  std::mt19937 rng(1);
  for (int s = 0; s < 100; ++s) {
    const auto g = random_sl2(rng), h = random_sl2(rng);
    ASSERT_TRUE(rep_matrix(g * h, 6) == rep_matrix(g, 6) * rep_matrix(h, 6)) << "pair " << s;
  }
}

TEST(Transvectant, SixthOfPurePowers) {
  const auto u6 = BinaryForm<Qx>::from_plain({1, 0, 0, 0, 0, 0, 0});
  const auto v6 = BinaryForm<Qx>::from_plain({0, 0, 0, 0, 0, 0, 1});
  const auto t = transvectant(u6, v6, 6);
  ASSERT_EQ(t.n, 0);
  EXPECT_EQ(t.c[0], Qx(1));
}

TEST(Transvectant, SixthOfOctahedralFormMatchesQuadric) {
  const auto p = BinaryForm<Qx>::from_plain({0, 1, 0, 0, 0, -1, 0});
  EXPECT_EQ(transvectant(p, p, 6).c[0], Qx(make_rational(1, 3)));
  EXPECT_EQ(invariant_quadric(p.c), Qx(make_rational(1, 3)));
  const Qx s = Qx(1) / Qx::sqrt_or_throw(6);
  EXPECT_EQ(p.c, (std::vector<Qx>{Qx(0), s, Qx(0), Qx(0), Qx(0), -s, Qx(0)}));
}

TEST(Transvectant, Equivariance) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int s = 0; s < 20; ++s) {
    std::vector<Rational> f, h;
    for (int k = 0; k < 7; ++k) f.push_back(Rational(c(rng))), h.push_back(Rational(c(rng)));
    const auto gq = random_sl2(rng);
    const GroupElement<Rational> g{gq.a.rational_part(), gq.b.rational_part(), gq.c.rational_part(), gq.d.rational_part()};
    for (int p : {2, 4, 6})
      EXPECT_EQ(transvectant_plain(act_plain(g, f), act_plain(g, h), p), act_plain(g, transvectant_plain(f, h, p)));
  }
}

TEST(Transvectant, ClebschGordanRanks) {
  // First transvectants of basis quartics span V_6, third ones span V_2.
  for (auto [p, rank] : {std::pair{1, 7}, std::pair{3, 3}}) {
    Matrix<Rational> m(10, 2 * 4 - 2 * p + 1, Rational(0));
    int row = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        std::vector<Rational> ei(5, Rational(0)), ej(5, Rational(0));
        ei[i] = 1;
        ej[j] = 1;
        const auto t = transvectant_plain(ei, ej, p);
        for (std::size_t k = 0; k < t.size(); ++k) m(row, static_cast<int>(k)) = t[k];
        ++row;
      }
    EXPECT_EQ(exact_rank(m), rank) << "order " << p;
  }
}

TEST(EBasis, Orthonormal) {
  const auto e = e_basis(Qx(1));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) EXPECT_EQ(hermitian(e[i], e[j]), Qx(i == j ? 1 : 0)) << i << "," << j;
}

TEST(EBasis, FormToSkew) {
  const auto e = e_basis(Qx(1));
  EXPECT_TRUE(form_to_skew(BinaryForm<Qx>::from_plain({1, 0, 0, 0, 0, 0, 0})) == e[0]);
  const auto p = BinaryForm<Qx>::from_plain({0, 1, 0, 0, 0, -1, 0});
  EXPECT_TRUE(form_to_skew(p) == (e[1] + e[5] * Qx(-1)) * (Qx(1) / Qx::sqrt_or_throw(6)));
}

TEST(EBasis, WedgeActionPreservesSpan) {
  std::mt19937 rng(4);
  const auto e = e_basis(Qx(1));
  for (int s = 0; s < 10; ++s) {
    const auto R = rep_matrix(random_sl2(rng), 4);
    for (int k = 0; k < 7; ++k) {
      const auto img = wedge_action(R, e[k]);
      auto proj = e[0] * Qx(0);
      for (int i = 0; i < 7; ++i) proj = proj + e[i] * hermitian(e[i], img);
      EXPECT_TRUE(proj == img) << "sample " << s << " E" << k;
    }
  }
}

TEST(Orbits, ClosedForms) {
  const auto id = GroupElement<Qx>::identity(Qx(1));
  EXPECT_TRUE(projectively_equal(orbit_point(id, Orbit::open), std::vector<Qx>{0, 1, 0, 0, 0, -1, 0}));
  EXPECT_TRUE(projectively_equal(orbit_point(id, Orbit::u5v), std::vector<Qx>{0, 1, 0, 0, 0, 0, 0}));
  const Qx r10 = Qx::sqrt_or_throw(10), r30 = Qx::sqrt_or_throw(30);
  const std::vector<Qx> expect{Qx(0), Qx(-4), r10 * 2, -r30, r10, Qx(-1), Qx(0)};
  EXPECT_TRUE(projectively_equal(orbit_point(GroupElement<Qx>{1, 0, 1, 1}, Orbit::open), expect));
}

TEST(Quadric, VanishesOnDevelopableOrbit) {
  std::mt19937 rng(6);
  EXPECT_TRUE(invariant_quadric(std::vector<Qx>{1, 0, 0, 0, 0, 0, 0}).is_zero());
  for (int s = 0; s < 50; ++s) EXPECT_TRUE(invariant_quadric(orbit_point(random_gl2(rng), Orbit::u5v)).is_zero());
}

TEST(Quadric, OpenOrbitIsTwiceDetSixth) {
  std::mt19937 rng(7);
  for (int s = 0; s < 50; ++s) {
    const auto g = random_gl2(rng);
    EXPECT_EQ(invariant_quadric(orbit_point(g, Orbit::open)), pow6(g.det()) * 2);
  }
}

TEST(Quadric, PerturbedConstraintsHoldOnOrbits) {
  std::mt19937 rng(8);
  for (int s = 0; s < 100; ++s) {
    const auto g = random_gl2(rng);
    for (auto which : {Orbit::open, Orbit::u5v})
      for (const auto& r : perturbed_residual(orbit_to_omega(orbit_point(g, which)))) EXPECT_TRUE(r.is_zero());
  }
}

TEST(Isotropy, TwentyFourElementsFixTheForm) {
  const auto iso = isotropy24();
  ASSERT_EQ(iso.size(), 24u);
  const auto p = BinaryForm<Qx>::from_plain({0, 1, 0, 0, 0, -1, 0});
  for (const auto& k : iso) EXPECT_TRUE(projectively_equal(act(k, p).c, p.c));
  for (const auto& x : iso)
    for (const auto& y : iso) {
      bool found = false;
      for (const auto& w : iso) found = found || (x * y).projectively_equal_to(w);
      EXPECT_TRUE(found);
    }
}

TEST(Isotropy, EighthRootFlipsSign) {
  const Qx xi = (Qx(1) + Qx::imag_unit()) / Qx::sqrt_or_throw(2);
  const auto p = BinaryForm<Qx>::from_plain({0, 1, 0, 0, 0, -1, 0});
  const auto q = act(GroupElement<Qx>{xi, Qx(0), Qx(0), Qx(1) / xi}, p);
  std::vector<Qx> neg;
  for (const auto& x : p.c) neg.push_back(-x);
  EXPECT_EQ(q.c, neg);
}

TEST(CommuteDiag, Holds) {
  std::mt19937 rng(10);
  EXPECT_TRUE(commutation_check(GroupElement<Qx>::identity(Qx(1))));
  EXPECT_TRUE(commutation_check(GroupElement<Qx>{Qx(2), Qx(0), Qx(0), Qx(make_rational(1, 2))}));
  std::uniform_int_distribution<int> n(-20, 20), m(1, 7);
  for (int s = 0; s < 10; ++s)
    EXPECT_TRUE(commutation_check(GroupElement<Qx>{Qx(1), Qx(make_rational(n(rng), m(rng))), Qx(0), Qx(1)}));
  for (int s = 0; s < 10; ++s) EXPECT_TRUE(commutation_check(random_sl2(rng)));
}

TEST(Orbits, RejectsSingularElements) {
  EXPECT_THROW(orbit_point(GroupElement<Qx>{1, 2, 2, 4}, Orbit::open), argument_error);
  EXPECT_THROW(parse_orbit("closed"), argument_error);
}
