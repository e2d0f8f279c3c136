#pragma once

#include "g25/grassmann/genericity.hpp"
#include "g25/moduli/generators.hpp"
#include "g25/moduli/levelset.hpp"
#include "g25/paperlab/digest.hpp"
#include "g25/paperlab/example5.hpp"
#include "g25/sl2/orbits.hpp"

#include <functional>
#include <random>

namespace g25 {

namespace detail {

inline std::string ramification_str(const RamificationResult& r) {
  if (r.reducible) return "reducible";
  std::string s;
  for (const auto& p : r.divisor) {
    if (!s.empty()) s += " ";
    s += (p.at_infinity ? std::string("inf") : "(" + p.z.re.str(6) + "," + p.z.im.str(6) + ")") + "x" +
         std::to_string(p.multiplicity);
  }
  return s;
}

// Moduli of two pencils agree entry by entry.
inline std::pair<bool, BigFloat> same_moduli(const PencilCurve<BigComplex>& a, const PencilCurve<Qx>& b, int bits) {
  BigFloat worst(0L, bits);
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 5; ++j) {
      const auto& p = a.rows[r][j];
      const auto& q = b.rows[r][j];
      const int d = std::max(p.degree(), q.degree());
      for (int k = 0; k <= d; ++k) {
        const BigFloat x = k <= p.degree() ? abs(p[k]) : BigFloat(0L, bits);
        const BigFloat y = k <= q.degree() ? sqrt(magnitude2(q[k], bits)) : BigFloat(0L, bits);
        worst = max(worst, abs(x - y));
      }
    }
  return {worst <= BigFloat(1e-30, bits), worst};
}

inline PencilCurve<Qx> qx_pencil(const std::array<std::array<std::pair<Qx, int>, 5>, 2>& e) {
  PencilCurve<Qx> c;
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 5; ++j) c.rows[r][j] = UniPoly<Qx>::monomial(e[r][j].first, e[r][j].second);
  return c;
}

inline GroupElement<Qx> random_group_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  while (true) {
    GroupElement<Qx> g{Qx(d(rng)), Qx(d(rng)), Qx(d(rng)), Qx(d(rng))};
    if (!g.det().is_zero()) return g;
  }
}

inline Rational random_positive(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(1, 40), m(1, 15);
  return make_rational(n(rng), m(rng));
}

}  // namespace detail

inline Checks suite_standard_curve(int bits) {
  Checks out;
  const auto cc = construct_curve(derive_data(Rational(1), Rational(1), Rational(1), bits));
  const Qx r6 = Qx::sqrt_or_throw(6);
  const auto expect = detail::qx_pencil({{{{{Qx(1), 0}, {Qx(0), 0}, {-r6, 2}, {Qx(-4), 3}, {Qx(-3), 4}}},
                                          {{{Qx(0), 0}, {Qx(1), 0}, {r6, 1}, {Qx(3), 2}, {Qx(2), 3}}}}});
  bool same = cc.exact_pencil.has_value();
  if (same)
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 5; ++j) same = same && chop(cc.exact_pencil->rows[r][j]) == chop(expect.rows[r][j]);
  out.push_back(bool_check("standard_curve.exact_pencil", same));
  if (cc.exact_curve) {
    const auto g = gram_and_defect(*cc.exact_curve);
    std::string diag;
    bool ok = g.constant_curvature;
    for (int k = 0; k < 7; ++k) {
      diag += (k ? "," : "") + g.gram(k, k).str();
      ok = ok && g.gram(k, k) == Qx(binomial(6, k));
    }
    out.push_back({"standard_curve.gram_diag", "1,6,15,20,15,6,1", diag, 0, ok});
    out.push_back(bool_check("standard_curve.reducible", ramification(*cc.exact_curve).reducible));
  }
  out.push_back(exact_check("standard_curve.count_solutions", Rational(1), Rational(count_solutions(Rational(1), Rational(1), Rational(1)))));
  return out;
}

inline Checks suite_rmk(int bits) {
  Checks out;
  const auto mp = derive_data(Rational(1), make_rational(1, 16), make_rational(1, 4096), bits);
  const auto cc = construct_curve(mp);
  const Qx r6 = Qx::sqrt_or_throw(6);
  const auto expect = detail::qx_pencil({{{{{Qx(1), 0}, {Qx(0), 0}, {-r6, 2}, {Qx(-2), 3}, {Qx(-3), 4}}},
                                          {{{Qx(0), 0}, {Qx(1), 0}, {r6, 1}, {Qx(3), 2}, {Qx(4), 3}}}}});
  const auto [same, worst] = detail::same_moduli(cc.pencil, expect, bits);
  out.push_back({"rmk.pencil_up_to_phases", "entrywise moduli equal", worst.str(6), 1e-30, same});
  out.push_back(bool_check("rmk.certified", cc.certificate.constant_curvature && cc.certificate.in_grassmannian));
  const auto xyz = exact_xyz(mp);
  out.push_back(exact_check("rmk.X", "2", xyz ? (*xyz)[0].str() : "inexact"));
  out.push_back(exact_check("rmk.Y", "2", xyz ? (*xyz)[1].str() : "inexact"));
  out.push_back(exact_check("rmk.Z", "2", xyz ? (*xyz)[2].str() : "inexact"));
  out.push_back(exact_check("rmk.count_solutions", Rational(1), Rational(count_solutions(mp))));
  return out;
}

inline Checks suite_f_identity(int) {
  return {bool_check("f_identity.symbolic", f_identity_holds())};
}

inline Checks suite_gradient(int) {
  Checks out;
  const std::vector<Rational> p{Rational(1), make_rational(1, 2), make_rational(1, 8)};
  const auto [v, grad] = f_polynomial().eval_and_gradient(p);
  out.push_back(exact_check("gradient.F(p0)", Rational(0), v));
  const Rational expect[3] = {Rational(0), make_rational(-13125, 256), make_rational(4375, 64)};
  for (int i = 0; i < 3; ++i)
    out.push_back(exact_check("gradient.dF/dt" + std::string(i == 2 ? "6" : std::to_string(i)), expect[i], grad[i]));
  const auto fv = f_value(p[0], p[1], p[2]);
  out.push_back(exact_check("gradient.F_derived(p0)", Rational(0), fv.derived_value));
  return out;
}

inline Checks suite_involution(int) {
  std::mt19937 rng(20240601);
  int scaled = 0, involutive = 0;
  const int n = 100;
  for (int i = 0; i < n; ++i) {
    const Rational t0 = detail::random_positive(rng), t1 = detail::random_positive(rng), t6 = detail::random_positive(rng);
    const auto s = sigma(t0, t1, t6);
    const Rational g = g_of(t0, t1, t6);
    scaled += f_polynomial().eval({s[0], s[1], s[2]}) == rpow(g, 21) * f_polynomial().eval({t0, t1, t6});
    const auto ss = sigma(s[0], s[1], s[2]);
    involutive += ss[0] == t0 && ss[1] == t1 && ss[2] == t6;
  }
  return {exact_check("involution.F_sigma_equals_g21_F", Rational(n), Rational(scaled)),
          exact_check("involution.sigma_squared_identity", Rational(n), Rational(involutive))};
}

inline Checks suite_w_functional(int bits) {
  Checks out;
  out.push_back(exact_check("w_functional.closed(1,1,1)/pi", Rational(40), w_closed_over_pi(Rational(1), Rational(1), Rational(1))));
  out.push_back(exact_check("w_functional.closed(1,1/16,1)/pi", make_rational(184, 7),
                            w_closed_over_pi(Rational(1), make_rational(1, 16), Rational(1))));
  std::vector<std::pair<std::string, ModuliPoint>> pts;
  pts.push_back({"standard", derive_data(Rational(1), Rational(1), Rational(1), bits)});
  pts.push_back({"rmk", derive_data(Rational(1), make_rational(1, 16), make_rational(1, 4096), bits)});
  pts.push_back({"eg_exact", derive_data(make_rational(11, 6), make_rational(1331, 864), make_rational(19487171, 17915904), bits)});
  {
    const Rational s = make_rational(3, 2);
    const auto b = level_set_s1(s, bits);
    const BigFloat S(s, bits);
    pts.push_back({"s1_3/2", derive_data(S, b.F1, pow(b.F1, 3) / (S * S))});
  }
  {
    const auto cusp = cusp_points(bits);
    pts.push_back({"cusp", derive_data(cusp.at(0).t0, cusp.at(0).t1, cusp.at(0).t6)});
  }
  for (const auto& [name, mp] : pts) {
    const auto cc = construct_curve(mp, 0, true);
    const double wc = cc.certificate.w_closed.value_or(0), wn = cc.certificate.w_numeric.value_or(0);
    const double rel = std::abs(wn - wc) / std::abs(wc);
    out.push_back({"w_functional.numeric_vs_closed." + name, fmt(wc), fmt(wn), 1e-6, rel <= 1e-6});
  }
  return out;
}

inline Checks suite_eg_exact(int bits) {
  Checks out;
  const Rational t0 = make_rational(11, 6), t1 = make_rational(1331, 864), t6 = make_rational(19487171, 17915904);
  out.push_back(exact_check("eg_exact.F", Rational(0), f_polynomial().eval({t0, t1, t6})));
  const auto mp = derive_data(t0, t1, t6, bits);
  out.push_back(exact_check("eg_exact.t2", make_rational(14641, 7776), mp.exact->t[2]));
  out.push_back(close_check("eg_exact.X2", BigFloat(make_rational(125, 33), bits), mp.X * mp.X, 1e-12));
  const auto xyz = exact_xyz(mp);
  out.push_back(exact_check("eg_exact.Z", "2", xyz ? (*xyz)[2].str() : mp.Z.str(20)));
  out.push_back(exact_check("eg_exact.count_solutions", Rational(2), Rational(count_solutions(mp))));
  const auto b0 = construct_curve(mp, 0), b1 = construct_curve(mp, 1);
  out.push_back(bound_check("eg_exact.branch0.gram_defect", 1e-10, b0.certificate.gram_defect));
  out.push_back(bound_check("eg_exact.branch1.gram_defect", 1e-10, b1.certificate.gram_defect));
  BigFloat worst(0L, bits);
  for (int k = 0; k < 10; ++k) {
    const auto& p = b0.curve[k];
    const auto& q = b1.curve[k];
    const int d = std::max(p.degree(), q.degree());
    for (int i = 0; i <= d; ++i) {
      const BigComplex x = i <= p.degree() ? p[i] : BigComplex::zero(bits);
      const BigComplex y = i <= q.degree() ? q[i] : BigComplex::zero(bits);
      worst = max(worst, abs(conj(x) - y));
    }
  }
  out.push_back(bound_check("eg_exact.branches_conjugate", 1e-30, worst.to_double()));
  return out;
}

inline Checks suite_eg_exact1(int) {
  const Q79 r = Q79::gen(0);
  const Q79 a = (Q79(20) + r * 2) / Q79(21);
  const auto d = derive_fields<Q79>(a, a, a);
  Checks out;
  out.push_back(exact_check("eg_exact1.t2", ((Q79(209) + r * 23) / Q79(189)).str(), d.t[2].str()));
  out.push_back(exact_check("eg_exact1.t3", ((Q79(9) + r) / Q79(8)).str(), d.t[3].str()));
  out.push_back(exact_check("eg_exact1.t4", ((Q79(209) + r * 23) / Q79(189)).str(), d.t[4].str()));
  out.push_back(exact_check("eg_exact1.t5", a.str(), d.t[5].str()));
  out.push_back(exact_check("eg_exact1.F", "0", f_polynomial().eval_as<Q79>({a, a, a}).str()));
  return out;
}

inline Checks suite_eg_cusp(int bits) { return cusp_verify(bits); }

inline Checks suite_levelset(int bits) {
  Checks out;
  const auto e = level_set_s1(make_rational(11, 6), bits), b = level_set_s1(Rational(1), bits);
  auto ex = [](const std::optional<Rational>& r) { return r ? r->str() : std::string("inexact"); };
  out.push_back(exact_check("levelset.F1(11/6)", "1331/864", ex(e.F1_exact)));
  out.push_back(exact_check("levelset.F2(11/6)", "1331/864", ex(e.F2_exact)));
  out.push_back(exact_check("levelset.F1(1)", "1", ex(b.F1_exact)));
  out.push_back(exact_check("levelset.F2(1)", "1/16", ex(b.F2_exact)));
  out.push_back(bool_check("levelset.factorization", s1_factorization().ok));
  for (int k = 0; k <= 5; ++k) {
    const Rational s = Rational(1) + make_rational(k, 6);
    const auto br = level_set_s1(s, bits);
    const double worst = std::max(br.residual1.to_double(), br.residual2.to_double());
    out.push_back(bound_check("levelset.residual.s=" + s.str(), 1e-30, worst));
  }
  // Rows of the g = 1 scan: a segment at t0 = 1, two arcs inside, one point at 11/6.
  const auto samples = scan(Rational(1), Rational(1), make_rational(11, 6), 6, bits);
  std::map<Rational, int> per_row;
  for (const auto& s : samples) ++per_row[s.t0];
  std::string got;
  bool ok = per_row.size() == 6;
  for (const auto& [t0, n] : per_row) {
    got += (got.empty() ? "" : " ") + t0.str() + ":" + std::to_string(n);
    if (t0 == 1)
      ok = ok && n > 2;
    else if (t0 == make_rational(11, 6))
      ok = ok && n == 1;
    else
      ok = ok && n == 2;
  }
  out.push_back({"levelset.g1_scan_rows", "1:segment, interior rows:2, 11/6:1", got, 0, ok});
  return out;
}

inline Checks suite_family33(int bits) {
  Checks out;
  const BigFloat pi = BigFloat::pi(bits);
  for (int k = 0; k < 12; ++k) {
    const BigFloat theta = pi * (2 * k + 1) / 12;
    const auto f = family33(theta);
    const auto jp = jp_checks(f.pencil, bits);
    BigFloat worst(0L, bits);
    for (const auto& r : jp.residuals) worst = max(worst, r);
    const std::string tag = "family33.theta=" + std::to_string(2 * k + 1) + "pi/12";
    out.push_back(bound_check(tag + ".jp_residual", 1e-12, worst.to_double()));
    out.push_back(bound_check(tag + ".gram_defect", 1e-10, gram_and_defect(wedge_pencil(f.pencil)).defect.to_double()));
  }
  return out;
}

inline Checks suite_ramification(int) {
  Checks out;
  std::mt19937 rng(77);
  const std::vector<std::optional<BigComplex>> zero_inf{BigComplex::zero(kFloatBits), std::nullopt}, inf{std::nullopt};
  int trans_ok = 0, tang_ok = 0;
  std::string trans_bad, tang_bad;
  const int n = 50;
  int rejected = 0;
  for (int i = 0; i < n; ++i) {
    // Degree 6 needs w_0 w_6 != 0; other draws give lower-degree curves.
    auto w = orbit_to_omega(orbit_point(detail::random_group_element(rng), Orbit::open));
    while (w[0].is_zero() || w[6].is_zero()) {
      ++rejected;
      w = orbit_to_omega(orbit_point(detail::random_group_element(rng), Orbit::open));
    }
    try {
      const auto r = ramification(transversal(w));
      if (!r.reducible && support_equals(r, zero_inf)) ++trans_ok;
      else if (trans_bad.empty()) trans_bad = detail::ramification_str(r);
    } catch (const std::exception& e) {
      if (trans_bad.empty()) trans_bad = e.what();
    }
  }
  for (int i = 0; i < n; ++i) {
    auto tau = orbit_to_omega(orbit_point(detail::random_group_element(rng), Orbit::open));
    while (tau[0].is_zero()) tau = orbit_to_omega(orbit_point(detail::random_group_element(rng), Orbit::open));
    std::uniform_int_distribution<int> m(1, 6);
    const Qx mu(m(rng) * (i % 2 ? 1 : -1));
    try {
      const auto r = ramification(tangential(tau, mu));
      if (!r.reducible && support_equals(r, inf)) ++tang_ok;
      else if (tang_bad.empty()) tang_bad = detail::ramification_str(r);
    } catch (const std::exception& e) {
      if (tang_bad.empty()) tang_bad = e.what();
    }
  }
  out.push_back({"ramification.transversal_support_0_inf", std::to_string(n),
                 std::to_string(trans_ok) + " (" + std::to_string(rejected) + " draws of lower degree skipped)" +
                     (trans_bad.empty() ? "" : "; first miss: " + trans_bad),
                 0, trans_ok == n});
  out.push_back({"ramification.tangential_support_inf", std::to_string(n),
                 std::to_string(tang_ok) + (tang_bad.empty() ? "" : "; first miss: " + tang_bad), 0, tang_ok == n});
  const auto st = construct_curve(Rational(1), Rational(1), Rational(1));
  out.push_back(bool_check("ramification.standard_reducible", st.exact_curve && ramification(*st.exact_curve).reducible));
  return out;
}

inline Checks suite_representation(int) {
  Checks out;
  const GroupElement<Qx> g{Qx(2), Qx(3), Qx(1), Qx(2)}, h{Qx(1), Qx(make_rational(1, 3)), Qx(-2), Qx(make_rational(1, 3))};
  bool hom = true;
  for (int n = 1; n <= 6; ++n) hom = hom && rep_matrix(g * h, n) == rep_matrix(g, n) * rep_matrix(h, n);
  out.push_back(bool_check("representation.homomorphism", hom));
  const std::vector<Rational> f{1, 2, 0, -1, 3, 0, 1}, q{0, 1, 5, 0, -2, 1, 3};
  bool eq = true;
  for (const auto& a : {GroupElement<Rational>{2, 3, 1, 2}, GroupElement<Rational>{2, make_rational(1, 3), 5, make_rational(4, 3)}})
    for (int p = 0; p <= 6; ++p) eq = eq && transvectant_plain(act_plain(a, f), act_plain(a, q), p) == act_plain(a, transvectant_plain(f, q, p));
  out.push_back(bool_check("representation.transvectant_equivariance", eq));
  out.push_back(bool_check("representation.commutediag", commutation_check(g) && commutation_check(h)));
  const auto iso = isotropy24();
  const BinaryForm<Qx> uv = BinaryForm<Qx>::from_plain({0, 1, 0, 0, 0, -1, 0});
  int fixed = 0;
  for (const auto& k : iso) fixed += projectively_equal(act(k, uv).c, uv.c);
  out.push_back(exact_check("representation.isotropy24_fixes", Rational(24), Rational(fixed)));
  Qx det6 = g.det();
  det6 = det6 * det6 * det6 * det6 * det6 * det6;
  out.push_back(exact_check("representation.quadric_open_orbit", (det6 * 2).str(), invariant_quadric(orbit_point(g, Orbit::open)).str()));
  bool u5v = true;
  for (const auto& a : {g, h}) u5v = u5v && invariant_quadric(orbit_point(a, Orbit::u5v)).is_zero();
  out.push_back(bool_check("representation.quadric_u5v_orbit_zero", u5v));
  return out;
}

inline Checks suite_genericity(int) {
  Checks out;
  const auto ds = dual_system(Qx(1));
  const auto gen = center_genericity(ds[0], ds[1], ds[2]);
  out.push_back({"genericity.dual_system", "generic", gen.generic ? "generic (" + gen.method + ")" : "not generic", 0, gen.generic});
  std::array<SkewTensor<Qx>, 3> tr;
  for (auto& s : tr) s.p.fill(Qx(0));
  tr[0].p[pair_index(0, 1)] = 1;
  tr[1].p[pair_index(0, 2)] = 1;
  tr[2].p[pair_index(0, 3)] = 1;
  const auto deg = center_genericity(tr[0], tr[1], tr[2]);
  std::string w = "none";
  if (deg.witness) w = (*deg.witness)[0].str() + "," + (*deg.witness)[1].str() + "," + (*deg.witness)[2].str();
  out.push_back({"genericity.degenerate_triple", "not generic with witness", (deg.generic ? "generic" : "not generic") + std::string(", witness ") + w, 0,
                 !deg.generic && deg.witness.has_value()});
  return out;
}

inline Checks suite_example5(int bits) { return example5_suite(bits); }

inline Checks suite_second_ff(int bits) {
  Checks out;
  std::vector<BigComplex> grid;
  for (double r : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0})
    for (int k = 0; k < 8; ++k) grid.emplace_back(r * std::cos(k * M_PI / 4), r * std::sin(k * M_PI / 4), bits);
  const BigFloat pi = BigFloat::pi(bits);
  for (int k = 1; k <= 10; ++k) {
    const auto F = wedge_pencil(family33(pi * k / 12).pencil);
    double lo = 1e300, hi = -1e300;
    for (const auto& z : grid) {
      const double a = second_ff_norm(F, z).to_double();
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    out.push_back({"second_ff.family33.theta=" + std::to_string(k) + "pi/12.spread", "> 0.001", fmt(hi - lo), 1e-3, hi - lo > 1e-3});
  }
  const auto st = construct_curve(Rational(1), Rational(1), Rational(1));
  double worst = 0;
  for (const auto& z : grid) worst = std::max(worst, std::abs(second_ff_norm(*st.exact_curve, z).to_double() - 20.0 / 3));
  out.push_back(bound_check("second_ff.standard_constant_20/3", 1e-12, worst));
  return out;
}

// Digests of the transcribed polynomials; a changed coefficient changes them.
inline const std::map<std::string, std::string>& pinned_digests() {
  static const std::map<std::string, std::string> d{
      {"F", "a90446c09de86f7656fca5d6bac48a8add59baa416b2009fe06ea90c1f1609e5"},
      {"cusp.E", "8faa40f97c89b83385a2b5762179a5df43d3cd649767355883ea826058542dfc"},
      {"cusp.G", "1f303d33284eee1ef605c0e37032041b11f7d261a4ab1005ad2776a374bc5b83"},
      {"cusp.R", "2aa7804e3cb6652230612bb03f4e26cd371eb8598f5b2f031bcd70d12b07f4d1"},
      {"cusp.S", "0040b2f1aec87ce010456d331ddadb8c78b846ad4c9efbebee3d20408773490a"},
      {"cusp.T", "0b4bd1db64460c3e3563ee8ba30826e109b68033bf794a872517f3e456857c36"},
      {"cusp.U", "ed7ff357608398db83a21420246d0feb6e4a229e44c8d4813b42536cddd80177"},
      {"cusp.p", "f964a9f933440f3f99157135a79b9fbce0f8cb149b92cab9c7148f8d6ea079eb"},
      {"cusp.q", "65a6865f3a1d420755c54d3c9383f12edf2df835dd0ff268fd29535cac0ba108"},
      {"cusp.r", "8fe82aef2760cc38e49c803fe5d10e4704d25836c49ec65fdaa4aaaef2a3ba90"},
      {"example5.f", "b66c48e9fe7e6853c9f410370d58abcf24e537fedc8714e91873665942488a9f"},
      {"example5.z", "d22459b8ab58243ac3847783d68c00f97545bbb82d98151741df869ab84ca9a9"},
  };
  return d;
}

inline std::map<std::string, const MultiPoly*> transcribed_polynomials() {
  const auto& c = cusp_data();
  return {{"F", &f_polynomial()}, {"example5.f", &example5_f()}, {"example5.z", &example5_z()},
          {"cusp.p", &c.p},        {"cusp.q", &c.q},             {"cusp.r", &c.r},
          {"cusp.E", &c.E},        {"cusp.G", &c.G},             {"cusp.R", &c.R},
          {"cusp.S", &c.S},        {"cusp.T", &c.T},             {"cusp.U", &c.U}};
}

inline Checks suite_digests() {
  Checks out;
  for (const auto& [name, p] : transcribed_polynomials()) {
    const auto it = pinned_digests().find(name);
    out.push_back(exact_check("digest." + name, it == pinned_digests().end() ? "unpinned" : it->second, poly_digest(*p)));
  }
  return out;
}

struct SuiteGroup {
  std::string name;
  std::function<Checks(int)> run;
};

inline const std::vector<SuiteGroup>& suite_groups() {
  static const std::vector<SuiteGroup> g{
      {"standard_curve", suite_standard_curve}, {"rmk", suite_rmk},
      {"f_identity", suite_f_identity},         {"gradient", suite_gradient},
      {"involution", suite_involution},         {"w_functional", suite_w_functional},
      {"eg_exact", suite_eg_exact},             {"eg_exact1", suite_eg_exact1},
      {"eg_cusp", suite_eg_cusp},               {"levelset", suite_levelset},
      {"family33", suite_family33},             {"ramification", suite_ramification},
      {"representation", suite_representation}, {"genericity", suite_genericity},
      {"example5", suite_example5},             {"second_ff", suite_second_ff},
  };
  return g;
}

// Runs one group; an exception becomes a failing check rather than an abort.
inline Checks run_group(const SuiteGroup& g, int bits) {
  try {
    return g.run(bits);
  } catch (const std::exception& e) {
    return {{g.name + ".exception", "no exception", e.what(), 0, false}};
  }
}

}  // namespace g25
