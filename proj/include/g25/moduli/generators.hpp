#pragma once

#include "g25/grassmann/curve.hpp"
#include "g25/moduli/point.hpp"
#include "g25/sl2/orbits.hpp"

#include <array>
#include <optional>
#include <vector>

namespace g25 {

// The five quadratic constraints on the coefficients of a transversal or
// tangential generator.
template <class T>
std::array<T, 5> perturbed_residual(const std::vector<T>& w) {
  if (w.size() != 7) throw argument_error("perturbed_residual needs seven coefficients");
  return {w[0] * w[4] - w[1] * w[3] * 4 + w[2] * w[2] * 3, w[0] * w[5] - w[1] * w[4] * 3 + w[2] * w[3] * 2,
          w[0] * w[6] - w[2] * w[4] * 9 + w[3] * w[3] * 8, w[2] * w[6] - w[3] * w[5] * 4 + w[4] * w[4] * 3,
          w[1] * w[6] - w[2] * w[5] * 3 + w[3] * w[4] * 2};
}

namespace detail {

template <class T>
void require_perturbed(const std::vector<T>& w, double tol, const char* who) {
  const auto r = perturbed_residual(w);
  if constexpr (scalar_traits<T>::exact) {
    for (const auto& x : r)
      if (!is_exact_zero(x)) throw argument_error(std::string(who) + ": coefficients violate the quadratic constraints");
  } else {
    BigFloat scale(1L, kFloatBits);
    for (const auto& x : w) scale = max(scale, magnitude2(x, kFloatBits));
    for (const auto& x : r)
      if (sqrt(magnitude2(x, kFloatBits)) > scale * tol)
        throw argument_error(std::string(who) + ": coefficients violate the quadratic constraints");
  }
}

template <class T>
PlueckerCurve<T> curve_from_column(const std::array<UniPoly<T>, 7>& col, const T& like) {
  const auto e = e_basis(like);
  std::array<UniPoly<T>, 10> p;
  for (int k = 0; k < 7; ++k)
    for (int q = 0; q < 10; ++q)
      if (!is_exact_zero(e[k].p[q])) p[q] = p[q] + col[k] * e[k].p[q];
  return PlueckerCurve<T>(p);
}

}  // namespace detail

// sum_k w_k sqrt(C(6,k)) z^k E_k.
template <class T>
PlueckerCurve<T> transversal(const std::vector<T>& w, double tol = kFloatTolerance) {
  detail::require_perturbed(w, tol, "transversal");
  std::array<UniPoly<T>, 7> col;
  for (int k = 0; k < 7; ++k) col[k] = UniPoly<T>::monomial(w[k] * sqrt_rat(binomial(6, k), w[k]), k);
  return detail::curve_from_column(col, w[0]);
}

// Lower-triangular L(tau, mu) applied to Z_6 = (sqrt(C(6,k)) z^k); the (0,0)
// entry is tau_0.
template <class T>
Matrix<T> tangential_matrix(const std::vector<T>& t, const T& mu) {
  const T z = t[0] * 0;
  auto r = [&](long n) { return sqrt_rat(Rational(n), t[0]); };
  const T m2 = mu * mu, m3 = m2 * mu, m4 = m3 * mu, m5 = m4 * mu, m6 = m5 * mu;
  Matrix<T> L(7, 7, z);
  const std::vector<std::vector<T>> rows = {
      {t[0]},
      {t[1] * r(6), -mu * t[0]},
      {t[2] * r(15), -mu * t[1] * r(10), m2 * t[0]},
      {t[3] * r(5) * 2, -mu * t[2] * r(30), m2 * t[1] * r(3) * 2, -m3 * t[0]},
      {t[4] * r(15), -mu * t[3] * r(10) * 2, m2 * t[2] * 6, -m3 * t[1] * r(3) * 2, m4 * t[0]},
      {t[5] * r(6), -mu * t[4] * 5, m2 * t[3] * r(10) * 2, -m3 * t[2] * r(30), m4 * t[1] * r(10), -m5 * t[0]},
      {t[6], -mu * t[5] * r(6), m2 * t[4] * r(15), -m3 * t[3] * r(5) * 2, m4 * t[2] * r(15), -m5 * t[1] * r(6),
       m6 * t[0]},
  };
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j <= i; ++j) L(i, j) = rows[i][j];
  return L;
}

template <class T>
PlueckerCurve<T> tangential(const std::vector<T>& tau, const T& mu, double tol = kFloatTolerance) {
  if (tau.size() != 7) throw argument_error("tangential needs seven coefficients");
  if (is_exact_zero(mu) || (!scalar_traits<T>::exact && magnitude2(mu, kFloatBits) <= BigFloat(tol * tol, kFloatBits)))
    throw argument_error("tangential: mu must be nonzero");
  detail::require_perturbed(tau, tol, "tangential");
  const auto L = tangential_matrix(tau, mu);
  std::array<UniPoly<T>, 7> col;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j <= i; ++j)
      col[i] = col[i] + UniPoly<T>::monomial(L(i, j) * sqrt_rat(binomial(6, j), mu), j);
  return detail::curve_from_column(col, tau[0]);
}

template <class T>
struct Family33 {
  PencilCurve<T> pencil;
  BigFloat t0, t1, g;
  std::optional<Rational> t1_exact;
};

namespace detail {

template <class T>
PencilCurve<T> family33_pencil(const T& phase) {
  const T one = one_like(phase), zero = phase * 0, r6 = sqrt_rat(6, phase);
  auto m = [&](const T& c, int k) { return UniPoly<T>::monomial(c, k); };
  PencilCurve<T> pc;
  pc.rows[0] = {m(one, 0), UniPoly<T>(), m(-r6, 2), m(phase - one * 3, 3), m(one * -3, 4)};
  pc.rows[1] = {UniPoly<T>(), m(one, 0), m(r6, 1), m(one * 3, 2), m(phase + one * 3, 3)};
  (void)zero;
  return pc;
}

inline BigFloat family33_t1(const BigFloat& c) { return (-c * 3 + 5) / (c * 12 + 20); }

}  // namespace detail

// The one-parameter family with phase e^{i theta}; it lies over
// t0 = 1, t1 = (5 - 3 cos theta)/(20 + 12 cos theta), g = 1.
inline Family33<BigComplex> family33(const BigFloat& theta) {
  const int bits = theta.precision();
  Family33<BigComplex> f{detail::family33_pencil(BigComplex::expi(theta)), BigFloat(1L, bits),
                         detail::family33_t1(cos(theta)), BigFloat(1L, bits), std::nullopt};
  return f;
}

// theta = k pi / 12, exactly.
inline Family33<Qx> family33_exact(int k, int bits = kFloatBits) {
  const Qx phase = root_of_unity24(k);
  const Qx c2 = phase + conj(phase);  // 2 cos theta
  Family33<Qx> f{detail::family33_pencil(phase), BigFloat(1L, bits), BigFloat(0L, bits), BigFloat(1L, bits),
                 std::nullopt};
  if (c2.is_rational()) {
    const Rational c = c2.coef(0) / 2;
    f.t1_exact = (Rational(5) - c * 3) / (c * 12 + 20);
    f.t1 = BigFloat(*f.t1_exact, bits);
  } else {
    f.t1 = detail::family33_t1(c2.to_complex(bits).re / 2);
  }
  return f;
}

}  // namespace g25
