#pragma once

#include "g25/algebra/sturm.hpp"
#include "g25/moduli/solve.hpp"

#include <iomanip>
#include <ostream>
#include <vector>

namespace g25 {

struct S1Branches {
  BigFloat F1, F2;
  std::optional<Rational> F1_exact, F2_exact;
  BigFloat residual1, residual2;  // |F(s, F_i, F_i^3/s^2)| relative to its term scale
};

namespace detail {

inline BigFloat relative_f(const BigFloat& t0, const BigFloat& t1, const BigFloat& t6) {
  const auto& f = f_polynomial();
  return abs(f.eval_as<BigFloat>({t0, t1, t6})) / f.abs_scale<BigFloat>({t0, t1, t6});
}

}  // namespace detail

// The two psi-branches of the g = 1 level set over s = t0 in [1, 11/6]:
// F_{1,2}(s) = s^3 (199 + 642 s + 9 s^2 +- 30 D) / (4 (21 s - 1)^2),
// D = (3 s + 2) sqrt((4 s + 1)(11 - 6 s)).
inline S1Branches level_set_s1(const Rational& s, int bits = kFloatBits) {
  if (s < 1 || s > make_rational(11, 6)) throw argument_error("level_set_s1: s must lie in [1, 11/6]");
  const Rational rad = (s * 4 + 1) * (Rational(11) - s * 6);
  const Rational base = s * s * s / ((s * 21 - 1) * (s * 21 - 1) * 4);
  const Rational poly = Rational(199) + s * 642 + s * s * 9;
  S1Branches out;
  Rational root;
  if (rational_sqrt(rad, root)) {
    const Rational d = (s * 3 + 2) * root * 30;
    out.F1_exact = base * (poly + d);
    out.F2_exact = base * (poly - d);
    out.F1 = BigFloat(*out.F1_exact, bits);
    out.F2 = BigFloat(*out.F2_exact, bits);
  } else {
    const BigFloat d = sqrt(BigFloat(rad, bits)) * BigFloat(s * 3 + 2, bits) * 30;
    out.F1 = (BigFloat(poly, bits) + d) * BigFloat(base, bits);
    out.F2 = (BigFloat(poly, bits) - d) * BigFloat(base, bits);
  }
  const BigFloat S(s, bits);
  out.residual1 = detail::relative_f(S, out.F1, pow(out.F1, 3) / (S * S));
  out.residual2 = detail::relative_f(S, out.F2, pow(out.F2, 3) / (S * S));
  return out;
}

// F on g = 1 with t6 = t1^3 / t0^2, cleared by t0^12.
inline MultiPoly f_on_g1() {
  const std::vector<std::string> v{"t0", "t1"};
  MultiPoly out(v);
  for (const auto& [e, c] : f_polynomial().terms()) out.add_term({e[0] + 12 - 2 * e[2], e[1] + 3 * e[2]}, c);
  return out;
}

struct S1Factorization {
  bool ok = false;
  MultiPoly quotient;
};

// The g = 1 restriction factors as
// (441 t0^8 - 42 t0^7 + ... + 16 t1^2)(t0 - 1)(2 t0^3 - 3 t1 t0 + t1)(3 t0 + 2)^2
// times a monomial; the last factor has no positive zero.
inline S1Factorization s1_factorization() {
  const std::vector<std::string> v{"t0", "t1"};
  const MultiPoly branch = MultiPoly::parse(
                               "441*t0**8 - 42*t0**7 + t0**6 - 72*t0**5*t1 - 5136*t0**4*t1 - 1592*t0**3*t1"
                               " + 7056*t0**2*t1**2 - 672*t0*t1**2 + 16*t1**2",
                               v) *
                           MultiPoly::parse("t0 - 1", v) * MultiPoly::parse("2*t0**3 - 3*t1*t0 + t1", v) *
                           MultiPoly::parse("(3*t0 + 2)**2", v);
  S1Factorization out{false, MultiPoly(v)};
  try {
    out.quotient = f_on_g1().divide_exact(branch);
    out.ok = out.quotient.size() == 1;
  } catch (const numeric_error&) {
    out.ok = false;
  }
  return out;
}

struct ScanSample {
  Rational t0;
  BigFloat t1, g;
  std::optional<Rational> t1_exact;
  double F = 0, X = 0, Y = 0, Z = 0;
  bool in_S = false;
  int count = 0;
  double W_over_pi = 0;
};

// F(t0, t1, t1^3 / (t0^2 g)) (t0^2 g)^6 as a polynomial in t1.
inline UniPoly<Rational> g_slice(const Rational& t0, const Rational& g) {
  const Rational k = t0 * t0 * g;
  std::vector<Rational> c;
  for (const auto& [e, coef] : f_polynomial().terms()) {
    const int d = e[1] + 3 * e[2];
    if (static_cast<int>(c.size()) <= d) c.resize(d + 1);
    c[d] += coef * rpow(t0, e[0]) * rpow(k, 6 - e[2]);
  }
  return UniPoly<Rational>(std::move(c));
}

namespace detail {

inline BigFloat polish_root(const UniPoly<Rational>& p, const RootInterval& iv, int bits) {
  const auto q = squarefree_part(p);
  const auto fq = q.map([&](const Rational& x) { return BigFloat(x, bits); });
  const auto dq = fq.derivative();
  const BigFloat lo(iv.lo, bits), hi(iv.hi, bits);
  BigFloat x(iv.mid(), bits);
  const BigFloat stop = ldexp(BigFloat(1L, bits), -(bits - 8));
  for (int it = 0; it < 200; ++it) {
    const BigFloat d = dq.eval(x);
    if (d.is_zero()) break;
    const BigFloat step = fq.eval(x) / d;
    const BigFloat nx = x - step;
    if (nx < lo || nx > hi) break;
    x = nx;
    if (abs(step) <= stop * abs(x)) break;
  }
  return x;
}

inline ScanSample make_sample(const ModuliPoint& mp, const Rational& t0, const BigFloat& g) {
  ScanSample s;
  s.t0 = t0;
  s.t1 = mp.t(1);
  s.g = g;
  s.F = (mp.F / mp.F_scale).to_double();
  s.X = mp.X.to_double();
  s.Y = mp.Y.to_double();
  s.Z = mp.Z.to_double();
  s.in_S = feasibility(mp).in_S;
  s.count = s.in_S ? static_cast<int>(solve_uvw(mp).size()) : 0;
  s.W_over_pi = w_closed_over_pi(mp.t(0), mp.t(1), mp.num.g).to_double();
  return s;
}

}  // namespace detail

// Feasible points of the g-level set on the rows t0 = lo + (hi - lo) k / (n - 1).
inline std::vector<ScanSample> scan(const Rational& g, const Rational& lo, const Rational& hi, int resolution,
                                    int bits = kFloatBits) {
  if (resolution < 2) throw argument_error("scan: resolution must be at least 2");
  if (g <= 0 || lo <= 0 || hi < lo) throw argument_error("scan: need g > 0 and 0 < lo <= hi");
  std::vector<ScanSample> out;
  const BigFloat gf(g, bits);
  for (int k = 0; k < resolution; ++k) {
    const Rational t0 = lo + (hi - lo) * Rational(k) / Rational(resolution - 1);
    const auto p = g_slice(t0, g);
    auto keep = [&](ScanSample s) {
      if (s.in_S) out.push_back(std::move(s));
    };
    if (p.is_zero()) {
      // Whole row on the hypersurface: sample t1 on a fixed rational grid.
      for (int j = 1; j <= 128; ++j) {
        const Rational t1(j, 64);
        const Rational t6 = t1 * t1 * t1 / (t0 * t0 * g);
        auto s = detail::make_sample(derive_data(t0, t1, t6, bits), t0, gf);
        s.t1_exact = t1;
        keep(s);
      }
      continue;
    }
    const auto q = p.shift_down(p.valuation());
    if (q.degree() < 1) continue;
    const Rational bound = cauchy_bound(q);
    for (const auto& iv : isolate_roots(q, Rational(0), bound, Rational(1, Integer(1) << 40))) {
      if (iv.hi <= 0) continue;
      if (iv.exact()) {
        const Rational t1 = iv.lo;
        auto s = detail::make_sample(derive_data(t0, t1, t1 * t1 * t1 / (t0 * t0 * g), bits), t0, gf);
        s.t1_exact = t1;
        keep(s);
      } else {
        const BigFloat t1 = detail::polish_root(q, iv, bits);
        const BigFloat T0(t0, bits);
        keep(detail::make_sample(derive_data(T0, t1, pow(t1, 3) / (T0 * T0 * gf)), t0, gf));
      }
    }
  }
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<ScanSample>& samples) {
  os << "t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi\n" << std::setprecision(17);
  for (const auto& s : samples)
    os << s.t0.convert_to<double>() << ',' << s.t1.to_double() << ',' << s.g.to_double() << ',' << s.F << ',' << s.X << ','
       << s.Y << ',' << s.Z << ',' << (s.in_S ? 1 : 0) << ',' << s.count << ',' << s.W_over_pi << '\n';
}

// Whitespace-separated columns for gnuplot, one block per t0 row.
inline void write_dat(std::ostream& os, const std::vector<ScanSample>& samples) {
  os << "# t0 t1 g F X Y Z in_S count W_over_pi\n" << std::setprecision(17);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (i > 0 && samples[i - 1].t0 != s.t0) os << '\n';
    os << s.t0.convert_to<double>() << ' ' << s.t1.to_double() << ' ' << s.g.to_double() << ' ' << s.F << ' ' << s.X << ' '
       << s.Y << ' ' << s.Z << ' ' << (s.in_S ? 1 : 0) << ' ' << s.count << ' ' << s.W_over_pi << '\n';
  }
}

}  // namespace g25
