#pragma once

#include "g25/sl2/ebasis.hpp"

#include <string>
#include <vector>

namespace g25 {

enum class Orbit { open, u5v, u6 };

inline Orbit parse_orbit(const std::string& s) {
  if (s == "open") return Orbit::open;
  if (s == "u5v") return Orbit::u5v;
  if (s == "u6") return Orbit::u6;
  throw argument_error("unknown orbit '" + s + "'");
}

// Projective coordinates [a_0 : ... : a_6] of g.uv(u^4-v^4), g.u^5v or g.u^6,
// in the closed forms used throughout (the first two carry an extra overall
// sqrt6 relative to the normalized basis).
template <class T>
std::vector<T> orbit_point(const GroupElement<T>& g, Orbit which) {
  if (is_exact_zero(g.det())) throw argument_error("orbit_point of a singular element");
  const T &a = g.a, &b = g.b, &c = g.c, &d = g.d;
  auto pw = [](const T& x, int k) {
    T out = one_like(x);
    for (int i = 0; i < k; ++i) out = out * x;
    return out;
  };
  const T r6 = sqrt_rat(6, a), r10 = sqrt_rat(10, a), r15 = sqrt_rat(15, a), r20 = sqrt_rat(20, a),
          r30 = sqrt_rat(30, a);
  const T ad = a * d, bc = b * c;
  switch (which) {
    case Orbit::open:
      return {
          -r6 * pw(d, 5) * c + r6 * d * pw(c, 5),
          pw(d, 4) * (ad + bc * 5) - a * pw(c, 4) * d * 5 - b * pw(c, 5),
          -b * pw(d, 3) * (ad + bc * 2) * r10 + a * pw(c, 3) * (ad * 2 + bc) * r10,
          pw(b, 2) * pw(d, 2) * (ad + bc) * r30 - pw(a, 2) * pw(c, 2) * (ad + bc) * r30,
          -pw(b, 3) * d * (ad * 2 + bc) * r10 + pw(a, 3) * c * (ad + bc * 2) * r10,
          a * pw(b, 4) * d * 5 + pw(b, 5) * c - pw(a, 4) * (ad + bc * 5),
          -r6 * pw(b, 5) * a + r6 * b * pw(a, 5),
      };
    case Orbit::u5v:
      return {
          -r6 * pw(d, 5) * c,
          pw(d, 4) * (ad + bc * 5),
          -b * pw(d, 3) * (ad + bc * 2) * r10,
          pw(b, 2) * pw(d, 2) * (ad + bc) * r30,
          -pw(b, 3) * d * (ad * 2 + bc) * r10,
          a * pw(b, 4) * d * 5 + pw(b, 5) * c,
          -r6 * pw(b, 5) * a,
      };
    case Orbit::u6:
      return {pw(d, 6),           -r6 * b * pw(d, 5), r15 * pw(b, 2) * pw(d, 4), -r20 * pw(b, 3) * pw(d, 3),
              r15 * pw(b, 4) * pw(d, 2), -r6 * pw(b, 5) * d, pw(b, 6)};
  }
  throw argument_error("unknown orbit");
}

// Rescale orbit coordinates [w_0 : sqrt6 w_1 : sqrt15 w_2 : ...] to the w_i.
template <class T>
std::vector<T> orbit_to_omega(const std::vector<T>& a) {
  std::vector<T> w;
  for (int i = 0; i < 7; ++i) w.push_back(a[i] / sqrt_rat(binomial(6, i), a[i]));
  return w;
}

// The SL2-invariant quadratic form on V_6.
template <class T>
T invariant_quadric(const std::vector<T>& x) {
  if (x.size() != 7) throw argument_error("invariant_quadric needs seven coordinates");
  return x[0] * x[6] * 2 - x[1] * x[5] * 2 + x[2] * x[4] * 2 - x[3] * x[3];
}

// The 24 elements of the isotropy group of [uv(u^4 - v^4)], exact.
inline std::vector<GroupElement<Qx>> isotropy24() {
  std::vector<GroupElement<Qx>> out;
  const Qx i = Qx::imag_unit();
  const Qx h = Qx::gen(1) * Qx(make_rational(1, 2));  // 1/sqrt2
  for (int k = 0; k < 4; ++k) {
    const Qx xi = root_of_unity24(3 * k), ixi = root_of_unity24(-3 * k);
    out.push_back({xi, Qx(0), Qx(0), ixi});
    out.push_back({Qx(0), xi, -ixi, Qx(0)});
    out.push_back({h * ixi, -h * ixi, h * xi, h * xi});
    out.push_back({h * i * ixi, -h * ixi, h * xi, -h * i * xi});
    out.push_back({-h * ixi, -h * ixi, h * xi, -h * xi});
    out.push_back({-h * i * ixi, -h * ixi, h * xi, h * i * xi});
  }
  return out;
}

// The basis E_0..E_6 as the columns of a 10x7 matrix.
template <class T>
Matrix<T> e_basis_matrix(const T& like) {
  auto e = e_basis(like);
  Matrix<T> m(10, 7, like * 0);
  for (int k = 0; k < 7; ++k)
    for (int r = 0; r < 10; ++r) m(r, k) = e[k].p[r];
  return m;
}

// Largest entry of |rho^4(A) . (E_0..E_6) - (E_0..E_6) rho^6(A)|; exactly zero
// on exact scalars when the two sides agree.
template <class T>
BigFloat commutation_defect(const GroupElement<T>& A, int bits = kDefaultPrecision) {
  const Matrix<T> r4 = rep_matrix(A, 4), r6 = rep_matrix(A, 6);
  const auto e = e_basis(A.a);
  const Matrix<T> rhs = e_basis_matrix(A.a) * r6;
  BigFloat worst(0L, bits);
  for (int k = 0; k < 7; ++k) {
    auto lhs = wedge_action(r4, e[k]);
    for (int r = 0; r < 10; ++r) {
      T diff = lhs.p[r] - rhs(r, k);
      if constexpr (scalar_traits<T>::exact) {
        if (!is_exact_zero(diff)) worst = max(worst, abs(to_complex(diff, bits)));
      } else {
        worst = max(worst, abs(to_complex(diff, bits)));
      }
    }
  }
  return worst;
}

template <class T>
bool commutation_check(const GroupElement<T>& A, int n = 4) {
  if (n != 4) throw argument_error("the commutation identity is stated for n = 4");
  if constexpr (scalar_traits<T>::exact) {
    return commutation_defect(A).is_zero();
  } else {
    const int bits = A.a.precision();
    return commutation_defect(A, bits) <= ldexp(BigFloat(1L, bits), -(bits - 24));
  }
}

}  // namespace g25
