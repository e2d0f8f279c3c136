#pragma once

#include "g25/grassmann/certificate.hpp"
#include "g25/moduli/point.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

namespace g25 {

struct BranchTriple {
  BigComplex u, v, w;
};

struct DiagonalSolution {
  BranchTriple uvw;
  std::array<BigFloat, 7> theta;  // theta_0 = theta_6 = 0
  BigFloat residual;
  std::array<BigComplex, 7> omega;
  std::array<BigFloat, 5> a;
  bool conjugate = false;
};

namespace detail {

inline BigFloat unit_imag(const BigFloat& half, const BigFloat& tol) {
  BigFloat r = -half * half + 1;
  if (r.sign() < 0) {
    if (-r > tol) throw contract_violation("unit_imag: |re| exceeds 1");
    r = BigFloat(0L, half.precision());
  }
  return sqrt(r);
}

// The cases X^2 = Y^2 = Z^2 = 4, XYZ = 8 (one real triple) and |X|,|Y|,|Z| > 2.
inline bool outside_unit(const ModuliPoint& mp, const BigFloat& tol) {
  if (mp.exact) return mp.exact->X2 > 4 || mp.exact->Y2 > 4 || mp.exact->Z2 > 4;
  return abs(mp.X) > tol + 2 || abs(mp.Y) > tol + 2 || abs(mp.Z) > tol + 2;
}

inline bool single_real(const ModuliPoint& mp, const BigFloat& tol) {
  if (mp.exact) {
    const auto& d = *mp.exact;
    return d.X2 == 4 && d.Y2 == 4 && d.Z2 == 4 && d.XYZ == 8;
  }
  auto near = [&](const BigFloat& x, long v) { return abs(x - v) <= tol; };
  return near(mp.X * mp.X, 4) && near(mp.Y * mp.Y, 4) && near(mp.Z * mp.Z, 4) && near(mp.X * mp.Y * mp.Z, 8);
}

// Into [0, 2 pi), with values within rounding of 2 pi sent to 0.
inline BigFloat wrap(const BigFloat& x) {
  const BigFloat two_pi = BigFloat::pi(x.precision()) * 2;
  BigFloat r = x - two_pi * floor(x / two_pi);
  if (two_pi - r <= ldexp(BigFloat(1L, x.precision()), -(x.precision() / 2))) r = BigFloat(0L, x.precision());
  return r;
}

}  // namespace detail

// Unit solutions of u^2 - X u + 1 = 0, w^2 - Z w + 1 = 0 with v = u w and
// v + 1/v = Y.  Two conjugate triples, one when all are real, none when a
// coordinate leaves [-2, 2].
inline std::vector<BranchTriple> solve_uvw(const ModuliPoint& mp, double tol = kFloatTolerance) {
  const int bits = mp.bits;
  const BigFloat eps(tol, bits);
  if (detail::outside_unit(mp, eps)) return {};
  const BigFloat hx = mp.X / 2, hz = mp.Z / 2;
  const BigComplex u(hx, detail::unit_imag(hx, eps));
  const BigFloat wi = detail::unit_imag(hz, eps);
  BranchTriple best;
  BigFloat best_err;
  for (int s : {1, -1}) {
    const BigComplex w(hz, wi * s);
    const BigComplex v = u * w;
    const BigFloat err = abs(v + BigComplex::one(bits) / v - BigComplex(mp.Y));
    if (s == 1 || err < best_err) best = {u, v, w}, best_err = err;
  }
  if (detail::single_real(mp, eps)) {
    best.u.im = BigFloat(0L, bits);
    best.v.im = BigFloat(0L, bits);
    best.w.im = BigFloat(0L, bits);
    return {best};
  }
  return {best, {conj(best.u), conj(best.v), conj(best.w)}};
}

namespace detail {

// x1, y1, x2, y2, x3, y3 for a branch triple.
inline std::array<BigComplex, 6> congruence_targets(const ModuliPoint& mp, const BranchTriple& uvw) {
  const auto& t = mp.num.t;
  const BigComplex one = BigComplex::one(mp.bits);
  auto rt = [](const BigFloat& x) { return sqrt(x); };
  const BigComplex y1 = one * rt(t[0] * t[4]) / (uvw.u * (rt(t[1] * t[3]) * 4) - BigComplex(t[2] * 3));
  const BigComplex y2 = one * rt(t[0] * t[5]) / (uvw.v * (rt(t[1] * t[4]) * 3) - BigComplex(rt(t[2] * t[3]) * 2));
  const BigComplex y3 = one * rt(t[0] * t[6]) / (uvw.w * (rt(t[2] * t[4]) * 9) - BigComplex(t[3] * 8));
  return {y1 * uvw.u, y1, y2 * uvw.v, y2, y3 * uvw.w, y3};
}

inline BigFloat congruence_residual(const std::array<BigFloat, 7>& th, const std::array<BigComplex, 6>& x) {
  auto e = [](const BigFloat& a) { return BigComplex::expi(a); };
  return std::max({abs(e(th[1] + th[3] - th[4]) - x[0]), abs(e(th[2] * 2 - th[4]) - x[1]),
                   abs(e(th[1] + th[4] - th[5]) - x[2]), abs(e(th[2] + th[3] - th[5]) - x[3]),
                   abs(e(th[2] + th[4]) - x[4]), abs(e(th[3] * 2) - x[5])});
}

inline void fill_amplitudes(const ModuliPoint& mp, DiagonalSolution& s) {
  const auto& t = mp.num.t;
  const int bits = mp.bits;
  for (int i = 0; i < 7; ++i) s.omega[i] = BigComplex::polar(sqrt(t[i]), s.theta[i]);
  s.a = {BigFloat(1L, bits), BigFloat(1L, bits) / sqrt(t[0]), BigFloat(1L, bits) / sqrt(t[1]),
         BigFloat(1L, bits) / sqrt(t[1]), sqrt(t[1] / t[6])};
  s.conjugate = s.uvw.u.im.sign() < 0;
}

}  // namespace detail

// theta_1..theta_5 from the six congruences
//   x1 = e^{i(th1+th3-th4)}, y1 = e^{i(2th2-th4)}, x2 = e^{i(th1+th4-th5)},
//   y2 = e^{i(th2+th3-th5)}, x3 = e^{i(th2+th4)},  y3 = e^{2i th3}.
inline DiagonalSolution reconstruct_angles(const ModuliPoint& mp, const BranchTriple& uvw,
                                           double threshold = kFloatTolerance) {
  const int bits = mp.bits;
  const auto x = detail::congruence_targets(mp, uvw);
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat noise(threshold, bits);

  std::optional<DiagonalSolution> best;
  for (int k3 = 0; k3 < 2; ++k3)
    for (int k2 = 0; k2 < 3; ++k2) {
      std::array<BigFloat, 7> th;
      th[0] = th[6] = BigFloat(0L, bits);
      th[3] = arg(x[5]) / 2 + pi * k3;
      th[2] = (arg(x[1]) + arg(x[4])) / 3 + pi * 2 * k2 / 3;
      th[4] = arg(x[4]) - th[2];
      th[1] = arg(x[0]) - th[3] + th[4];
      th[5] = th[1] + th[4] - arg(x[2]);
      for (int i = 1; i <= 5; ++i) th[i] = detail::wrap(th[i]);
      const BigFloat res = detail::congruence_residual(th, x);
      if (res > noise) continue;
      bool better = !best;
      for (int i = 1; i <= 5 && best; ++i) {
        if (abs(th[i] - best->theta[i]) <= noise) continue;
        better = th[i] < best->theta[i];
        break;
      }
      if (better) {
        best = DiagonalSolution{};
        best->theta = th;
        best->residual = res;
      }
    }
  if (!best) throw inconsistency_error("reconstruct_angles: no branch satisfies the angle congruences");
  best->uvw = uvw;
  detail::fill_amplitudes(mp, *best);
  return *best;
}

// The solution for the conjugate triple, taken as the negated angles so the
// two curves are conjugate coefficient by coefficient.
inline DiagonalSolution conjugate_solution(const ModuliPoint& mp, const DiagonalSolution& s,
                                           double threshold = kFloatTolerance) {
  DiagonalSolution c = s;
  c.uvw = {conj(s.uvw.u), conj(s.uvw.v), conj(s.uvw.w)};
  for (int i = 1; i <= 5; ++i) c.theta[i] = detail::wrap(-s.theta[i]);
  c.residual = detail::congruence_residual(c.theta, detail::congruence_targets(mp, c.uvw));
  if (c.residual > BigFloat(threshold, mp.bits))
    throw inconsistency_error("conjugate_solution: negated angles miss the conjugate congruences");
  detail::fill_amplitudes(mp, c);
  return c;
}

// 0 off S, 1 for the real triple, else 2.
inline int count_solutions(const ModuliPoint& mp) {
  if (!feasibility(mp).in_S) return 0;
  return static_cast<int>(solve_uvw(mp).size());
}
inline int count_solutions(const Rational& t0, const Rational& t1, const Rational& t6) {
  return count_solutions(derive_data(t0, t1, t6));
}

namespace detail {

// Coefficient and power of each p_ij (lexicographic pair order).
template <class T>
PlueckerCurve<T> assemble(const std::array<T, 7>& w, const std::array<T, 5>& a, const T& r6) {
  const std::array<T, 10> c{a[0] * a[1] * w[0],      r6 * a[0] * a[2] * w[1], a[0] * a[3] * w[2] * 3,
                            a[0] * a[4] * w[3] * 2,  r6 * a[1] * a[2] * w[2], a[1] * a[3] * w[3] * 4,
                            a[1] * a[4] * w[4] * 3,  r6 * a[2] * a[3] * w[4], r6 * a[2] * a[4] * w[5],
                            a[3] * a[4] * w[6]};
  // pairs 01 02 03 04 12 13 14 23 24 34
  return PlueckerCurve<T>::from_monomials(c, {0, 1, 2, 3, 2, 3, 4, 4, 5, 6});
}

// Rows (1, 0, -p12, -p13, -p14) and (0, 1, p02, p03, p04) over p01.
template <class T>
PencilCurve<T> pencil_of(const PlueckerCurve<T>& F) {
  const auto& p01 = F.at(0, 1);
  if (p01.degree() != 0) throw contract_violation("pencil_of: p01 is not a nonzero constant");
  const T inv = one_like(p01[0]) / p01[0];
  PencilCurve<T> pc;
  pc.rows[0] = {UniPoly<T>::monomial(one_like(inv), 0), UniPoly<T>(), F.at(1, 2) * (-inv), F.at(1, 3) * (-inv),
                F.at(1, 4) * (-inv)};
  pc.rows[1] = {UniPoly<T>(), UniPoly<T>::monomial(one_like(inv), 0), F.at(0, 2) * inv, F.at(0, 3) * inv,
                F.at(0, 4) * inv};
  return pc;
}

inline std::optional<Qx> exact_phase(const BigFloat& theta) {
  const BigFloat k = theta * 12 / BigFloat::pi(theta.precision());
  const BigFloat r = floor(k + BigFloat(0.5, theta.precision()));
  if (abs(k - r) > BigFloat(1e-40, theta.precision())) return std::nullopt;
  return root_of_unity24(static_cast<int>(r.to_double()));
}

}  // namespace detail

struct ConstructedCurve {
  DiagonalSolution solution;
  PencilCurve<BigComplex> pencil;
  PlueckerCurve<BigComplex> curve;
  std::optional<PencilCurve<Qx>> exact_pencil;
  std::optional<PlueckerCurve<Qx>> exact_curve;
  Certificate certificate;
};

// Assemble and certify the curve of branch `branch` (0 or 1) at a point of S.
inline ConstructedCurve construct_curve(const ModuliPoint& mp, int branch = 0, bool with_quadrature = false) {
  if (!feasibility(mp).in_S) throw feasibility_error("construct_curve: point is not in S");
  const auto triples = solve_uvw(mp);
  if (branch < 0 || branch >= static_cast<int>(triples.size()))
    throw argument_error("construct_curve: branch " + std::to_string(branch) + " does not exist here");
  const DiagonalSolution sol =
      branch == 0 ? reconstruct_angles(mp, triples[0]) : conjugate_solution(mp, reconstruct_angles(mp, triples[0]));
  const int bits = mp.bits;

  std::optional<PlueckerCurve<Qx>> exact;
  if (mp.exact) {
    const auto& d = *mp.exact;
    std::array<Qx, 7> w;
    bool ok = true;
    for (int i = 0; i < 7 && ok; ++i) {
      auto ph = detail::exact_phase(sol.theta[i]);
      auto rt = Qx::sqrt_of(d.t[i]);
      ok = ph && rt;
      if (ok) w[i] = *rt * *ph;
    }
    auto ia0 = Qx::sqrt_of(Rational(1) / d.t[0]), ia1 = Qx::sqrt_of(Rational(1) / d.t[1]),
         a4 = Qx::sqrt_of(d.t[1] / d.t[6]);
    if (ok && ia0 && ia1 && a4) exact = detail::assemble<Qx>(w, {Qx(1), *ia0, *ia1, *ia1, *a4}, Qx::sqrt_or_throw(6));
  }

  std::array<BigComplex, 5> a;
  for (int i = 0; i < 5; ++i) a[i] = BigComplex(sol.a[i]);
  auto F = detail::assemble<BigComplex>(sol.omega, a, BigComplex(sqrt(BigFloat(6L, bits))));
  if (exact) F = exact->map([&](const Qx& x) { return x.to_complex(bits); });

  const double wc = w_closed(mp.t(0).to_double(), mp.t(1).to_double(), mp.num.g.to_double());
  Certificate cert = exact ? certify(*exact, wc, with_quadrature) : certify(F, wc, with_quadrature);
  if (!cert.in_grassmannian || !cert.constant_curvature || cert.gram_defect > kFloatTolerance)
    throw inconsistency_error("construct_curve: assembled curve failed certification");

  ConstructedCurve out{sol, detail::pencil_of(F), F, std::nullopt, exact, cert};
  if (exact) out.exact_pencil = detail::pencil_of(*exact);
  return out;
}

inline ConstructedCurve construct_curve(const Rational& t0, const Rational& t1, const Rational& t6, int branch = 0,
                                        bool with_quadrature = false) {
  return construct_curve(derive_data(t0, t1, t6), branch, with_quadrature);
}

}  // namespace g25
