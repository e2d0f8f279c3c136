#pragma once

#include "g25/algebra/resultant.hpp"
#include "g25/algebra/roots.hpp"
#include "g25/paperlab/cusp.hpp"

#include <cmath>

namespace g25 {

inline const std::vector<std::string>& example5_vars() {
  static const std::vector<std::string> v{"g", "t_0"};
  return v;
}

// The plane curve f(g, t_0) = 0 cut out of F = 0 by t_1 = t_0^2/6.
inline const MultiPoly& example5_f() {
  static const MultiPoly f = MultiPoly::parse(
      "190512g^4t_0^6 + 20736g^4t_0^5 + 95256g^3t_0^6 + 27g^4t_0^4 - 205416g^3t_0^5 - 401301g^3t_0^4 - "
      "104328g^2t_0^5- 6264g^3t_0^3 - 59319g^2t_0^4 + 168282g^2t_0^3 + 32913gt_0^4 + 202140g^2t_0^2 + "
      "35388gt_0^3 + 6720gt_0^2 + 2034t_0^3 + 19504gt_0 + 2460t_0^2 + 688t_0 - 32",
      example5_vars());
  return f;
}

// Numerator factor of Z^2 - 4 on the same slice.
inline const MultiPoly& example5_z() {
  static const MultiPoly z = MultiPoly::parse(
      "9144576g^4t_0^6 - 54432g^4t_0^5 + 81g^4t_0^4 - 9828864g^3t_0^5 - 14818302g^3t_0^4 - 42984g^3t_0^3 + "
      "2242161g^2t_0^4 + 7314948g^2t_0^3 + 5702616g^2t_0^2 - 67284gt_0^3 - 73512gt_0^2 - 19104gt_0 + 36t_0^2 + "
      "48t_0 + 16",
      example5_vars());
  return z;
}

// l(g, t_0) = 405000 t_0^3 g^2 (3 t_0 + 2)(3 g t_0 + 2), with H = f / l on the slice.
inline Rational example5_l(const Rational& g, const Rational& t0) {
  return Rational(405000) * t0 * t0 * t0 * g * g * (t0 * 3 + 2) * (g * t0 * 3 + 2);
}

// Floating error bound (C(M,N) + C(I,J)) * sup_ratio for evaluating f / l
// with perturbations below h on a rectangle with lower corner (a, c).
inline double error_bound(int M, int N, int I, int J, double h, double a, double c, double sup_ratio = 1.0) {
  if (a <= 0 || c <= 0) throw argument_error("error_bound: a and c must be positive");
  if (h < 0) throw argument_error("error_bound: h must be nonnegative");
  auto gamma = [&](int n) {
    if (n * h >= 1) throw argument_error("error_bound: n h must stay below 1");
    return n * h / (1 - n * h);
  };
  const double ea = std::expm1(1 / a), ec = std::expm1(1 / c);
  auto C = [&](int p, int q) { return ea * gamma(p) + ec * gamma(q) + ea * ec * gamma(p) * gamma(q); };
  return (C(M, N) + C(I, J)) * sup_ratio;
}

namespace detail {

// Real roots of an exact univariate polynomial in [lo, hi] at `bits`.
inline std::vector<BigFloat> real_roots_in(const UniPoly<Rational>& p, const Rational& lo, const Rational& hi,
                                           int bits) {
  std::vector<BigFloat> out;
  if (p.degree() < 1) return out;
  const auto q = squarefree_part(p);
  for (const auto& iv : isolate_roots(q, lo, hi, make_rational(1, 1000000)))
    out.push_back(iv.exact() ? BigFloat(iv.lo, bits) : newton_polish(q, iv, bits));
  return out;
}

inline std::vector<BigFloat> all_real_roots(const UniPoly<Rational>& p, int bits) {
  const Rational b = cauchy_bound(p);
  return real_roots_in(p, -b, b, bits);
}

struct PlanePoint {
  BigFloat t0, g;
  int multiplicity = 1;  // of g as a root of the resultant
};

// Points of {f = 0, h = 0} in the rectangle, found through res_{t_0}(f, h).
inline std::vector<PlanePoint> common_points(const MultiPoly& f, const MultiPoly& h, const Rational& t0_lo,
                                             const Rational& t0_hi, const Rational& g_lo, const Rational& g_hi,
                                             int bits) {
  const auto res = resultant(f, h, "t_0").to_univariate("g");
  std::vector<std::pair<BigFloat, int>> gs;
  for (const auto& [fac, m] : squarefree_factors(res))
    for (const BigFloat& g : real_roots_in(fac, g_lo, g_hi, bits)) gs.push_back({g, m});
  std::vector<PlanePoint> out;
  for (const auto& [g, mult] : gs) {
    const int dh = h.degree_in("t_0");
    UniPoly<BigComplex> hc;
    {
      std::vector<BigComplex> c;
      for (int k = 0; k <= dh; ++k) {
        const auto ck = h.coefficient_in(1, k);
        c.push_back(BigComplex(ck.eval_as<BigFloat>({g, BigFloat(0L, bits)})));
      }
      hc = UniPoly<BigComplex>(c);
    }
    for (const auto& z : complex_roots(hc, bits)) {
      if (abs(z.im) > BigFloat(1e-20, bits)) continue;
      const BigFloat t0 = z.re;
      if (t0 < BigFloat(t0_lo, bits) || t0 > BigFloat(t0_hi, bits)) continue;
      const BigFloat fv = abs(f.eval_as<BigFloat>({g, t0})) / f.abs_scale<BigFloat>({g, t0});
      if (fv > BigFloat(1e-20, bits)) continue;
      bool dup = false;
      for (const auto& p : out) dup = dup || (abs(p.t0 - t0) < BigFloat(1e-12, bits) && abs(p.g - g) < BigFloat(1e-12, bits));
      if (!dup) out.push_back({t0, g, mult});
    }
  }
  return out;
}

}  // namespace detail

inline Checks example5_suite(int bits = kFloatBits) {
  Checks out;
  const auto& f = example5_f();
  const auto& v = example5_vars();
  const Rational one(1);
  auto at = [&](const MultiPoly& m, const Rational& g, const Rational& t0) { return m.eval({g, t0}); };
  const MultiPoly ft = f.derivative("t_0"), fg = f.derivative("g");

  out.push_back(exact_check("example5.f(1,1)", Rational(0), at(f, one, one)));
  out.push_back(exact_check("example5.slope_ratio", Rational(2), at(ft, one, one) / at(fg, one, one)));
  const Rational m23 = make_rational(-2, 3);
  out.push_back(exact_check("example5.singular.f", Rational(0), at(f, one, m23)));
  out.push_back(exact_check("example5.singular.df_dt0", Rational(0), at(ft, one, m23)));
  out.push_back(exact_check("example5.singular.df_dg", Rational(0), at(fg, one, m23)));

  // F restricted to t_1 = t_0^2/6, t_6 = t_1^3/(t_0^2 g), cleared by g^6, is divisible by f.
  {
    MultiPoly slice(v);
    for (const auto& [e, c] : f_polynomial().terms())
      slice.add_term({6 - e[2], e[0] + 2 * e[1] + 4 * e[2]}, c / (rpow(Rational(6), e[1]) * rpow(Rational(216), e[2])));
    bool ok = true;
    try {
      slice.divide_exact(f);
    } catch (const numeric_error&) {
      ok = false;
    }
    out.push_back(bool_check("example5.f_divides_slice", ok));
  }
  // H l = f exactly at sample rational points of the slice.
  {
    bool ok = true;
    for (const auto& [g, t0] : std::vector<std::pair<Rational, Rational>>{
             {make_rational(1, 2), make_rational(3, 2)}, {make_rational(7, 3), make_rational(5, 4)}, {Rational(2), Rational(3)}}) {
      const Rational t1 = t0 * t0 / 6, t6 = t1 * t1 * t1 / (t0 * t0 * g);
      ok = ok && derive_fields(t0, t1, t6).H * example5_l(g, t0) == at(f, g, t0);
    }
    out.push_back(bool_check("example5.H_equals_f_over_l", ok));
  }
  // Z^2 - 4 = z / (1215000 g^2 t_0^3 (3 t_0 + 2)(3 g t_0 + 2)) on the slice.
  {
    bool ok = true;
    for (const auto& [g, t0] : std::vector<std::pair<Rational, Rational>>{
             {make_rational(1, 2), make_rational(3, 2)}, {make_rational(7, 3), make_rational(5, 4)}, {Rational(2), Rational(3)}}) {
      const Rational t1 = t0 * t0 / 6, t6 = t1 * t1 * t1 / (t0 * t0 * g);
      const Rational den = Rational(1215000) * g * g * rpow(t0, 3) * (t0 * 3 + 2) * (g * t0 * 3 + 2);
      ok = ok && derive_fields(t0, t1, t6).Z2 - 4 == at(example5_z(), g, t0) / den;
    }
    out.push_back(bool_check("example5.Z2_numerator", ok));
  }

  // Edges of the rectangle: the printed roots are recovered and none lies on the edge itself.
  const Rational t0_lo = make_rational(8, 15), t0_hi(5), g_lo = make_rational(1475, 10000), g_hi(3);
  auto edge = [&](const char* name, const MultiPoly& restricted, const std::string& var, std::vector<double> printed,
                  const Rational& lo, const Rational& hi) {
    const auto roots = detail::all_real_roots(restricted.to_univariate(var), bits);
    std::string got, want;
    for (std::size_t i = 0; i < roots.size(); ++i) got += (i ? " " : "") + roots[i].str(11);
    bool ok = true;
    for (std::size_t i = 0; i < printed.size(); ++i) {
      want += (i ? " " : "") + fmt(printed[i]);
      bool hit = false;
      for (const auto& r : roots) hit = hit || std::abs(r.to_double() - printed[i]) < 1e-10;
      ok = ok && hit;
    }
    const std::string tag = std::string("example5.edge.") + name;
    out.push_back({tag + ".printed_roots", want.empty() ? "none" : want, got.empty() ? "none" : got, 1e-10, ok});
    int inside = 0;
    for (const auto& r : roots) inside += r >= BigFloat(lo, bits) && r <= BigFloat(hi, bits);
    out.push_back(exact_check(tag + ".roots_on_edge", Rational(0), Rational(inside)));
  };
  edge("t0=8/15", f.specialize("t_0", t0_lo), "g", {}, g_lo, g_hi);
  edge("t0=5", f.specialize("t_0", t0_hi), "g", {-0.4687373438, -0.0109931977}, g_lo, g_hi);
  edge("g=1475/10000", f.specialize("g", g_lo), "t_0", {0.0088038166}, t0_lo, t0_hi);
  edge("g=3", f.specialize("g", g_hi), "t_0", {-0.5591240674, -0.4272041173, -0.0337884110, 0.0005317397}, t0_lo, t0_hi);

  auto points_check = [&](const std::string& name, const std::vector<detail::PlanePoint>& pts,
                          const std::vector<std::array<double, 2>>& expect) {
    bool ok = pts.size() == expect.size();
    std::string got, want;
    for (std::size_t i = 0; i < pts.size(); ++i) got += (i ? " " : "") + ("(" + pts[i].t0.str(11) + "," + pts[i].g.str(11) + ")");
    for (std::size_t i = 0; i < expect.size(); ++i) {
      want += (i ? " " : "") + ("(" + fmt(expect[i][0]) + "," + fmt(expect[i][1]) + ")");
      bool hit = false;
      for (const auto& p : pts)
        hit = hit || (std::abs(p.t0.to_double() - expect[i][0]) < 1e-8 && std::abs(p.g.to_double() - expect[i][1]) < 1e-8);
      ok = ok && hit;
    }
    out.push_back({name, want, got, 1e-8, ok});
  };
  points_check("example5.horizontal_tangency", detail::common_points(f, ft, t0_lo, t0_hi, g_lo, g_hi, bits),
               {{0.6547026351, 2.9099350324}, {4.5794327836, 0.1475263321}});
  points_check("example5.vertical_tangency", detail::common_points(f, fg, t0_lo, t0_hi, g_lo, g_hi, bits),
               {{0.6455639336, 2.8381066968}, {4.7151618656, 0.1524993541}});
  // Every contact of the curve with Z^2 = 4 inside the rectangle; the printed one is
  // the tangency off the line g = 1.
  const auto zpts = detail::common_points(f, example5_z(), t0_lo, t0_hi, g_lo, g_hi, bits);
  {
    std::vector<detail::PlanePoint> off;
    for (const auto& p : zpts)
      if (abs(p.g - 1) > BigFloat(1e-12, bits)) off.push_back(p);
    points_check("example5.Z2_tangency", off, {{1.5271772661, 0.4663765333}});
    if (off.size() == 1) {
      const BigFloat t0 = off[0].t0, g = off[0].g, t1 = t0 * t0 / 6;
      const auto mp = derive_data(t0, t1, pow(t1, 3) / (t0 * t0 * g));
      out.push_back(close_check("example5.Z2_tangency.X", 1.8718004195, mp.X.to_double(), 1e-8));
      out.push_back(close_check("example5.Z2_tangency.Y", 1.8718004195, mp.Y.to_double(), 1e-8));
      out.push_back(close_check("example5.Z2_tangency.Z", 2.0, mp.Z.to_double(), 1e-8));
    }
    bool even = !zpts.empty();
    std::string got;
    for (const auto& p : zpts) {
      even = even && p.multiplicity % 2 == 0;
      got += (got.empty() ? "" : " ") + ("(" + p.t0.str(11) + "," + p.g.str(11) + ")x" + std::to_string(p.multiplicity));
    }
    out.push_back({"example5.Z2_contacts_even", "even multiplicity", got, 0, even});
  }

  const double eb = error_bound(4, 6, 3, 5, 1e-20, 0.1475, 8.0 / 15.0, 1.0);
  out.push_back({"example5.error_bound_magnitude", "1e-17 order", fmt(eb), 0, eb >= 1e-18 && eb < 1e-16});
  return out;
}

}  // namespace g25
