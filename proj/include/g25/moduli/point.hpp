#pragma once

#include "g25/algebra/multipoly.hpp"
#include "g25/grassmann/curve.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace g25 {

struct feasibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The defining hypersurface F(t0, t1, t6) = 0 of the diagonal family.
inline const MultiPoly& f_polynomial() {
  static const MultiPoly f = MultiPoly::parse(
      "9*t1**6*t6**3*t0**9+ ( 6912*t1**9*t6**2-366*t1**6*t6**3-10260*t1**4*t6**4 ) *t0**8"
      "+( 435888*t1**2*t6**5+299592*t1**4*t6**4+ ( -397332*t1**7+2560*t1**6 ) *t6**3-58329*t1**9*t6**2+63504*t1**12*t6 ) *t0**7"
      "+( 65088*t6**6+225504*t1**2*t6**5+ ( 31968*t1**5+533856*t1**4 ) *t6**4+ ( -451260*t1**7-128*t1**6 ) *t6**3+( -1296*t1**10-44868*t1**9 ) *t6**2+16416*t1**12*t6 ) *t0**6"
      "+ ( 78720*t6**6+ ( -1366848*t1**3+154368*t1**2 ) *t6**5+ ( -2480688*t1**5+203712*t1**4 ) *t6**4+ (2125440*t1**8+541536*t1**7 ) *t6**3+ ( -501336*t1**10+2560*t1**9 ) *t6**2+ ( -190512*t1**13-58329*t1**12 ) *t6+63504*t1**15 ) *t0**5"
      "+ ( 22016*t6**6+ ( 15552*t1**3+99840*t1**2) *t6**5+ ( 145152*t1**6-2192448*t1**5) *t6**4+ ( 1076544*t1**8+533856*t1**7 ) *t6**3+ ( 31104*t1**11-451260*t1**10 ) *t6**2+ ( -1296*t1**13-366*t1**12 ) *t6+6912*t1**15 ) *t0**4"
      "+ ( -1024*t6**6-645120*t1**3*t6**5+ ( 5774976*t1**6+154368*t1**5 ) *t6**4+ ( -3048192*t1**9-2480688*t1**8 ) *t6**3+( 2125440*t1**11+299592*t1**10 ) *t6**2-397332*t1**13*t6+9*t1**15 ) *t0**3"
      "+ ( 22016*t1**3*t6**5+15552*t1**6*t6**4+ ( 145152*t1**9+225504*t1**8 ) *t6**3+31968*t1**11*t6**2-10260*t1**13*t6 ) *t0**2"
      "+ ( 435888*t1**11*t6**2-1366848*t1**9*t6**3+78720*t1**6*t6**4 ) *t0+65088*t1**9*t6**3",
      {"t0", "t1", "t6"});
  return f;
}

// Everything rational in (t0, t1, t6): t2..t5, the squares X^2, Y^2, Z^2,
// the product XYZ, H, the three discriminant slacks and Q^2.  T is any field
// containing Q (Rational, BigFloat, Q79, ...).
template <class T>
struct DerivedData {
  std::array<T, 7> t;
  T g, X_num, Y_num, Z_num, X2, Y2, Z2, XYZ, H, Q2, Q_num;
  std::array<T, 3> slack;
};

template <class T>
DerivedData<T> derive_fields(const T& t0, const T& t1, const T& t6) {
  DerivedData<T> d;
  const T t2 = t0 * t1 * 5 / (t0 * 3 + 2);
  const T t3 = t0 * t1 * t6 * 5 / (t0 * t1 * t1 + t6 * 4);
  const T t4 = t0 * t1 * t1 * t6 * 5 / (t1 * t1 * t1 * 3 + t0 * t6 * 2);
  const T t5 = t6;
  d.t = {t0, t1, t2, t3, t4, t5, t6};
  d.g = t1 * t1 * t1 / (t0 * t0 * t6);
  d.X_num = t2 * t2 * 9 + t1 * t3 * 16 - t0 * t4;
  d.Y_num = t2 * t3 * 4 + t1 * t4 * 9 - t0 * t5;
  d.Z_num = t3 * t3 * 64 + t2 * t4 * 81 - t0 * t6;
  d.X2 = d.X_num * d.X_num / (t2 * t2 * t1 * t3 * 144);
  d.Y2 = d.Y_num * d.Y_num / (t2 * t3 * t1 * t4 * 36);
  d.Z2 = d.Z_num * d.Z_num / (t3 * t3 * t2 * t4 * 5184);
  d.XYZ = d.X_num * d.Y_num * d.Z_num / (t2 * t3 * t1 * t2 * t3 * t4 * 5184);
  d.H = -d.XYZ + d.X2 + d.Y2 + d.Z2 - 4;
  d.slack = {d.X_num * d.X_num - t1 * t2 * t2 * t3 * 576, d.Y_num * d.Y_num - t1 * t2 * t3 * t4 * 144,
             d.Z_num * d.Z_num - t2 * t3 * t3 * t4 * 20736};
  d.Q_num = -t1 * t6 + t2 * t5 * 9 + t3 * t4 * 4;
  d.Q2 = d.Q_num * d.Q_num / (t2 * t3 * t4 * t5 * 36);
  return d;
}

// 168750000 H t0^6 t1^11 t6^4 / (t2 t3 t4^2).
template <class T>
T f_from_h(const DerivedData<T>& d) {
  const auto& t = d.t;
  T m = d.H * 168750000L;
  for (int i = 0; i < 6; ++i) m = m * t[0];
  for (int i = 0; i < 11; ++i) m = m * t[1];
  for (int i = 0; i < 4; ++i) m = m * t[6];
  return m / (t[2] * t[3] * t[4] * t[4]);
}

// A point (t0, t1, t6) with its derived data; exact fields are present on
// rational input.
struct ModuliPoint {
  std::optional<DerivedData<Rational>> exact;
  DerivedData<BigFloat> num;
  BigFloat X, Y, Z, Q, F, F_scale;
  int bits = kFloatBits;

  const BigFloat& t(int i) const { return num.t[i]; }
  bool is_exact() const { return exact.has_value(); }
  std::optional<Rational> F_exact() const {
    if (!exact) return std::nullopt;
    return f_polynomial().eval({exact->t[0], exact->t[1], exact->t[6]});
  }
};

namespace detail {

inline ModuliPoint finish_point(ModuliPoint mp) {
  const auto& d = mp.num;
  const auto& t = d.t;
  auto sgn = [](const BigFloat& x) { return x.sign() < 0 ? -1 : 1; };
  mp.X = sqrt(d.X2) * sgn(d.X_num);
  mp.Y = sqrt(d.Y2) * sgn(d.Y_num);
  mp.Z = sqrt(d.Z2) * sgn(d.Z_num);
  mp.Q = sqrt(d.Q2) * sgn(d.Q_num);
  if (mp.exact) {
    mp.F = BigFloat(*mp.F_exact(), mp.bits);
  } else {
    mp.F = f_polynomial().eval_as<BigFloat>({t[0], t[1], t[6]});
  }
  mp.F_scale = f_polynomial().abs_scale<BigFloat>({t[0], t[1], t[6]});
  return mp;
}

}  // namespace detail

inline ModuliPoint derive_data(const Rational& t0, const Rational& t1, const Rational& t6, int bits = kFloatBits) {
  if (t0 <= 0 || t1 <= 0 || t6 <= 0) throw argument_error("moduli coordinates must be positive");
  ModuliPoint mp;
  mp.bits = bits;
  mp.exact = derive_fields(t0, t1, t6);
  mp.num = derive_fields(BigFloat(t0, bits), BigFloat(t1, bits), BigFloat(t6, bits));
  return detail::finish_point(std::move(mp));
}

inline ModuliPoint derive_data(const BigFloat& t0, const BigFloat& t1, const BigFloat& t6) {
  if (t0.sign() <= 0 || t1.sign() <= 0 || t6.sign() <= 0) throw argument_error("moduli coordinates must be positive");
  ModuliPoint mp;
  mp.bits = std::max({t0.precision(), t1.precision(), t6.precision()});
  mp.num = derive_fields(t0.with_precision(mp.bits), t1.with_precision(mp.bits), t6.with_precision(mp.bits));
  return detail::finish_point(std::move(mp));
}

// X, Y, Z themselves when they are rational.
inline std::optional<std::array<Rational, 3>> exact_xyz(const ModuliPoint& mp) {
  if (!mp.exact) return std::nullopt;
  const auto& d = *mp.exact;
  std::array<Rational, 3> out;
  const Rational* sq[3] = {&d.X2, &d.Y2, &d.Z2};
  const Rational* nm[3] = {&d.X_num, &d.Y_num, &d.Z_num};
  for (int i = 0; i < 3; ++i) {
    Rational r;
    if (!rational_sqrt(*sq[i], r)) return std::nullopt;
    out[i] = *nm[i] < 0 ? Rational(-r) : r;
  }
  return out;
}

// The symbolic identity between the transcribed F and the H-derived form,
// checked once as rational functions in (t0, t1, t6).
inline bool f_identity_holds() {
  static const bool ok = [] {
    const std::vector<std::string> v{"t0", "t1", "t6"};
    using RF = RationalFunction;
    auto var = [&](const char* n) { return RF::of(MultiPoly::variable(v, n)); };
    auto c = [&](long k) { return RF::of(MultiPoly::constant(v, Rational(k))); };
    const RF t0 = var("t0"), t1 = var("t1"), t6 = var("t6");
    const RF t2 = c(5) * t0 * t1 / (c(3) * t0 + c(2));
    const RF t3 = c(5) * t0 * t1 * t6 / (t0 * t1 * t1 + c(4) * t6);
    const RF t4 = c(5) * t0 * t1 * t1 * t6 / (c(3) * t1 * t1 * t1 + c(2) * t0 * t6);
    const RF t5 = t6;
    const RF xn = c(9) * t2 * t2 + c(16) * t1 * t3 - t0 * t4;
    const RF yn = c(4) * t2 * t3 + c(9) * t1 * t4 - t0 * t5;
    const RF zn = c(64) * t3 * t3 + c(81) * t2 * t4 - t0 * t6;
    const RF h = c(-1) * xn * yn * zn / (c(5184) * t2 * t3 * t1 * t2 * t3 * t4) +
                 xn * xn / (c(144) * t2 * t2 * t1 * t3) + yn * yn / (c(36) * t2 * t3 * t1 * t4) +
                 zn * zn / (c(5184) * t3 * t3 * t2 * t4) - c(4);
    RF m = c(168750000) * h;
    for (int i = 0; i < 6; ++i) m = m * t0;
    for (int i = 0; i < 11; ++i) m = m * t1;
    for (int i = 0; i < 4; ++i) m = m * t6;
    m = m / (t2 * t3 * t4 * t4);
    return equivalent(m, RF::of(f_polynomial()));
  }();
  return ok;
}

struct FValue {
  Rational explicit_value, derived_value;
};

// F at a rational point two ways; they must agree exactly.
inline FValue f_value(const Rational& t0, const Rational& t1, const Rational& t6) {
  if (t0 <= 0 || t1 <= 0 || t6 <= 0) throw argument_error("moduli coordinates must be positive");
  FValue v{f_polynomial().eval({t0, t1, t6}), f_from_h(derive_fields(t0, t1, t6))};
  if (v.explicit_value != v.derived_value)
    throw contract_violation("transcription fault: explicit F and H-derived F disagree at a rational point");
  return v;
}

struct Feasibility {
  std::array<BigFloat, 3> slacks;
  BigFloat Q;
  bool F_zero = false;
  bool in_S = false;
};

// F = 0 and the three discriminant slacks <= 0.  Exact points are judged
// exactly; float points relative to the natural scale of each expression.
inline Feasibility feasibility(const ModuliPoint& mp, double rel_tol = 1e-10) {
  Feasibility f{{mp.num.slack[0], mp.num.slack[1], mp.num.slack[2]}, mp.Q, false, false};
  if (mp.exact) {
    f.F_zero = *mp.F_exact() == 0;
    bool ok = f.F_zero;
    for (const auto& s : mp.exact->slack) ok = ok && s <= 0;
    f.in_S = ok;
    return f;
  }
  const BigFloat tol(rel_tol, mp.bits);
  f.F_zero = abs(mp.F) <= tol * mp.F_scale;
  const auto& t = mp.num.t;
  const BigFloat scales[3] = {
      pow(t[2] * t[2] * 9 + t[1] * t[3] * 16 + t[0] * t[4], 2) + t[1] * t[2] * t[2] * t[3] * 576,
      pow(t[2] * t[3] * 4 + t[1] * t[4] * 9 + t[0] * t[5], 2) + t[1] * t[2] * t[3] * t[4] * 144,
      pow(t[3] * t[3] * 64 + t[2] * t[4] * 81 + t[0] * t[6], 2) + t[2] * t[3] * t[3] * t[4] * 20736};
  bool ok = f.F_zero;
  for (int i = 0; i < 3; ++i) ok = ok && f.slacks[i] <= tol * scales[i];
  f.in_S = ok;
  return f;
}

// sigma(t) = (g t0, g t1, g^3 t6) with g = t1^3 / (t0^2 t6).
template <class T>
std::array<T, 3> sigma(const T& t0, const T& t1, const T& t6) {
  const T g = t1 * t1 * t1 / (t0 * t0 * t6);
  return {g * t0, g * t1, g * g * g * t6};
}

template <class T>
T g_of(const T& t0, const T& t1, const T& t6) {
  return t1 * t1 * t1 / (t0 * t0 * t6);
}

struct TauChart {
  std::array<Rational, 3> squares;  // A^2, B^2, C^2
  std::array<BigFloat, 3> abc;
};

// (A, B, C) = (sqrt t0, sqrt(t0/t6) t1, sqrt(t1/(t0 t6)) t1).
inline TauChart tau_chart(const Rational& t0, const Rational& t1, const Rational& t6, int bits = kFloatBits) {
  if (t0 <= 0 || t1 <= 0 || t6 <= 0) throw argument_error("moduli coordinates must be positive");
  TauChart c;
  c.squares = {t0, t0 / t6 * t1 * t1, t1 / (t0 * t6) * t1 * t1};
  for (int i = 0; i < 3; ++i) c.abc[i] = sqrt(BigFloat(c.squares[i], bits));
  return c;
}

// Inverse of the tau chart from the squares (A^2, B^2, C^2).
inline std::array<Rational, 3> tau_inverse(const std::array<Rational, 3>& sq) {
  const Rational &a2 = sq[0], &b2 = sq[1], &c2 = sq[2];
  return {a2, a2 * a2 * c2 / b2, rpow(a2, 5) * c2 * c2 / rpow(b2, 3)};
}

// W / pi in closed form with lambda = 1/g; exact on rational input.
template <class T>
T w_closed_over_pi(const T& t0, const T& t1, const T& g) {
  const T l = one_like(g) / g, one = one_like(g);
  auto pw = [](const T& x, int e) {
    T r = one_like(x);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  };
  const T inner = l * l * l * l * t1 * t1 * 1664 + pw(l, 3) * (l + one) * t1 * t1 * t0 * 192 -
                  l * (l * l * 87 + l * 548 + 87) * t1 * pw(t0, 5) * 144 -
                  l * l * t1 * pw(t0, 4) * ((l + one) * 673 - t1 * 1863) * 48 +
                  l * l * t1 * pw(t0, 3) * ((l + one) * t1 * 1701 - l * 374) * 32 +
                  l * l * (l * l * 101 + l * 4 + 101) * t1 * t1 * t0 * t0 * 144 -
                  (l * l * 249 + l * 1396 + 249) * pw(t0, 8) * 9 - l * pw(t0, 7) * ((l + one) * 158 - t1 * 567) * 36 -
                  (l + one) * pw(t0, 9) * 2673 - l * pw(t0, 6) * (l * 574 + (l + one) * t1 * 4671) * 4 +
                  pw(t0, 10) * 3564;
  const T den = pw(t0 * 3 + 2, 2) * pw(l * 2 + t0 * 3, 2) * pw(l * t1 * 4 + pw(t0, 3), 2) * 105;
  return (one * 20 + inner * 16 / den) * 2;
}

inline double w_closed(double t0, double t1, double g) {
  return w_closed_over_pi(BigFloat(t0, kFloatBits), BigFloat(t1, kFloatBits), BigFloat(g, kFloatBits)).to_double() *
         M_PI;
}

}  // namespace g25
