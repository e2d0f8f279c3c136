#pragma once

#include "g25/algebra/unipoly.hpp"

#include <algorithm>
#include <vector>

namespace g25 {

// All complex roots of p by simultaneous (Aberth-Ehrlich) iteration at the
// precision of the coefficients.  Deterministic starting points.
inline std::vector<BigComplex> complex_roots(const UniPoly<BigComplex>& p, int bits, int max_iter = 2000) {
  if (p.is_zero()) throw argument_error("roots of the zero polynomial");
  const int n = p.degree();
  if (n < 1) return {};
  auto monic = p.map([&](const BigComplex& c) { return c.with_precision(bits); }).monic();
  auto dp = monic.derivative();

  BigFloat radius(0L, bits);
  for (int k = 0; k < n; ++k) radius = max(radius, abs(monic[k]));
  radius = radius + 1;
  // Start inside the Cauchy disc on a slightly rotated circle.
  std::vector<BigComplex> z;
  const BigFloat two_pi = BigFloat::pi(bits) * 2;
  for (int k = 0; k < n; ++k) {
    BigFloat ang = two_pi * k / n + BigFloat(0.4, bits);
    z.push_back(BigComplex::polar(radius * BigFloat(0.5, bits), ang));
  }
  const BigFloat tol = ldexp(BigFloat(1L, bits), -(bits - 8));
  for (int it = 0; it < max_iter; ++it) {
    BigFloat worst(0L, bits);
    for (int i = 0; i < n; ++i) {
      BigComplex f = monic.eval(z[i]);
      if (f.is_zero()) continue;
      BigComplex ratio = f / dp.eval(z[i]);
      BigComplex sum = BigComplex::zero(bits);
      for (int j = 0; j < n; ++j)
        if (j != i) sum += BigComplex::one(bits) / (z[i] - z[j]);
      BigComplex step = ratio / (BigComplex::one(bits) - ratio * sum);
      z[i] -= step;
      BigFloat rel = abs(step) / max(abs(z[i]), BigFloat(1L, bits));
      worst = max(worst, rel);
    }
    if (worst < tol) break;
  }
  std::sort(z.begin(), z.end(), [](const BigComplex& a, const BigComplex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return z;
}

}  // namespace g25
