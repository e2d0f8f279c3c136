#pragma once

#include "g25/grassmann/certify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace g25 {

namespace detail {

template <class T>
void require_certified(const PlueckerCurve<T>& F, const char* who) {
  if (!gram_and_defect(F).constant_curvature)
    throw contract_violation(std::string(who) + ": curve is not certified constant-curvature");
}

// c = G^00 and the wedge components at working precision.
template <class T>
std::pair<BigFloat, std::array<UniPoly<BigComplex>, 5>> normalized_wedge(const PlueckerCurve<T>& F, int bits) {
  BigFloat c(0L, bits);
  for (int k = 0; k < 10; ++k) c = c + norm2(to_complex(F[k][0], bits));
  auto w = wedge_square(F);
  std::array<UniPoly<BigComplex>, 5> wc;
  for (int i = 0; i < 5; ++i) wc[i] = w[i].map([&](const T& x) { return to_complex(x, bits); });
  return {c, wc};
}

inline BigFloat a_norm2(const BigFloat& c, const std::array<UniPoly<BigComplex>, 5>& w, const BigComplex& z) {
  const int bits = z.precision();
  BigFloat s(0L, bits);
  for (const auto& q : w)
    if (!q.is_zero()) s = s + norm2(q.eval(z));
  BigFloat den = norm2(z) + 1;
  den = pow(den, 8) * c * c * 9;
  return BigFloat(20L, bits) / 3 - s / den;
}

}  // namespace detail

// |A|^2(z) = 20/3 - |dF ^ dF|^2 / (9 c^2 (1+|z|^2)^8) with c = |F(0)|^2.
template <class T>
BigFloat second_ff_norm(const PlueckerCurve<T>& F, const BigComplex& z) {
  detail::require_certified(F, "second_ff_norm");
  const int bits = std::max(z.precision(), kFloatBits);
  auto [c, w] = detail::normalized_wedge(F, bits);
  return detail::a_norm2(c, w, z.with_precision(bits));
}

struct QuadratureReport {
  double value = 0;
  double error_estimate = 0;
};

// Integral of |A|^2 against the induced area element 6/(1+|z|^2)^2 over C,
// in the coordinates z = tan(rho/2) e^{i phi}: adaptive Gauss-Kronrod in
// rho on [0, pi], trapezoid in phi (exact for the trigonometric polynomial).
template <class T>
QuadratureReport w_numeric_report(const PlueckerCurve<T>& F, double rel_tol = 1e-8, int phi_points = 32) {
  detail::require_certified(F, "w_numeric");
  const int bits = 128;
  auto [c, w] = detail::normalized_wedge(F, bits);
  auto radial = [&, &c = c, &w = w](double rho) {
    const double r = std::tan(rho / 2);
    BigFloat acc(0L, bits);
    for (int k = 0; k < phi_points; ++k) {
      const double phi = 2 * M_PI * k / phi_points;
      BigComplex z(r * std::cos(phi), r * std::sin(phi), bits);
      acc = acc + detail::a_norm2(c, w, z);
    }
    // (3/2) sin(rho) is the area density in (rho, phi); the phi mean times 2 pi.
    return acc.to_double() / phi_points * 2 * M_PI * 1.5 * std::sin(rho);
  };
  QuadratureReport rep;
  rep.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(radial, 0.0, M_PI, 15, rel_tol,
                                                                            &rep.error_estimate);
  if (!(rep.error_estimate <= rel_tol * std::abs(rep.value)) && rep.error_estimate > 1e-14)
    throw numeric_error("w_numeric did not reach the requested accuracy; estimate " + std::to_string(rep.value) +
                        " with error " + std::to_string(rep.error_estimate));
  return rep;
}

template <class T>
double w_numeric(const PlueckerCurve<T>& F, double rel_tol = 1e-8) {
  return w_numeric_report(F, rel_tol).value;
}

// The same integral from the coefficients w_k of dF ^ dF:
// 40 pi - (2 pi / (3 c^2)) sum_k |w_k|^2 k! (8-k)! / 9!.
template <class T>
BigFloat w_moment(const PlueckerCurve<T>& F, int bits = kFloatBits) {
  detail::require_certified(F, "w_moment");
  auto [c, w] = detail::normalized_wedge(F, bits);
  BigFloat s(0L, bits);
  for (const auto& q : w)
    for (int k = 0; k <= q.degree(); ++k) {
      if (k > 8) throw contract_violation("w_moment: wedge degree exceeds 8");
      s = s + norm2(q[k]) * Rational(factorial(k) * factorial(8 - k), factorial(9));
    }
  const BigFloat pi = BigFloat::pi(bits);
  return pi * 40 - pi * 2 * s / (c * c * 3);
}

}  // namespace g25
