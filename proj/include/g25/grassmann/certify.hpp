#pragma once

#include "g25/algebra/roots.hpp"
#include "g25/grassmann/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g25 {

template <class T>
struct GramResult {
  Matrix<T> gram;
  BigFloat defect;
  bool constant_curvature = false;
};

// G^{kl} = <B_k, B_l> for F = sum_k B_k z^k; the curve has constant
// curvature 4/6 exactly when G = c diag(C(6,k)).
template <class T>
GramResult<T> gram_and_defect(const PlueckerCurve<T>& F, double tol = kFloatTolerance) {
  if (F.degree() != 6) throw argument_error("gram_and_defect needs a degree-6 curve");
  std::array<SkewTensor<T>, 7> b;
  for (int k = 0; k < 7; ++k) b[k] = F.coefficient(k);
  GramResult<T> out{Matrix<T>(7, 7, F.zero()), BigFloat(0L, kFloatBits), false};
  for (int k = 0; k < 7; ++k)
    for (int l = 0; l < 7; ++l) out.gram(k, l) = hermitian(b[k], b[l]);
  const T c = out.gram(0, 0);
  bool exact_ok = true;
  for (int k = 0; k < 7; ++k)
    for (int l = 0; l < 7; ++l) {
      T diff = k == l ? out.gram(k, l) - c * binomial(6, k) : out.gram(k, l);
      if (!is_exact_zero(diff)) {
        exact_ok = false;
        out.defect = max(out.defect, abs(to_complex(diff, kFloatBits)));
      }
    }
  if constexpr (scalar_traits<T>::exact)
    out.constant_curvature = exact_ok;
  else
    out.constant_curvature = out.defect <= BigFloat(tol, kFloatBits);
  return out;
}

// dF/dz ^ dF/dz in wedge^4 C^5 = C^5, basis e_abcd in the lexicographic
// order 0123, 0124, 0134, 0234, 1234; component = 2 * Pfaffian of p'.
template <class T>
std::array<UniPoly<T>, 5> wedge_square(const PlueckerCurve<T>& F) {
  const auto d = F.derivative();
  static constexpr std::array<std::array<int, 4>, 5> quads{{{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}}};
  std::array<UniPoly<T>, 5> w;
  for (int r = 0; r < 5; ++r) {
    auto [a, b, c, e] = quads[r];
    auto pf = d.at(a, b) * d.at(c, e) - d.at(a, c) * d.at(b, e) + d.at(a, e) * d.at(b, c);
    w[r] = pf + pf;
  }
  return w;
}

struct RamifiedPoint {
  bool at_infinity = false;
  BigComplex z;
  int multiplicity = 0;
};

struct RamificationResult {
  bool reducible = false;
  std::vector<RamifiedPoint> divisor;
};

namespace detail {

// Yun's square-free factorization over an exact field: (factor, multiplicity).
template <class T>
std::vector<std::pair<UniPoly<T>, int>> squarefree_factors(const UniPoly<T>& f) {
  std::vector<std::pair<UniPoly<T>, int>> out;
  if (f.degree() < 1) return out;
  auto a = f.monic();
  auto b = a.derivative();
  auto c = poly_gcd(a, b);
  auto w = a / c;
  int i = 1;
  while (w.degree() > 0) {
    auto y = poly_gcd(w, c);
    auto z = w / y;
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = c / y;
  }
  return out;
}

inline void add_point(std::vector<RamifiedPoint>& div, const BigComplex& z, int m, const BigFloat& merge) {
  for (auto& p : div)
    if (!p.at_infinity && abs(p.z - z) <= merge) {
      p.multiplicity += m;
      return;
    }
  div.push_back({false, z, m});
}

}  // namespace detail

// Ramified points of F: zeros of dF ^ dF after clearing the common factor,
// with multiplicity; the order at infinity is 2(deg F - 2) - deg(dF ^ dF),
// since w^{2d-4} (dF ^ dF)(1/w) is the wedge of the reversed curve.
template <class T>
RamificationResult ramification(const PlueckerCurve<T>& F, int bits = kFloatBits, double tol = kFloatTolerance) {
  if (!in_grassmannian(F, tol)) throw contract_violation("ramification: curve is not in G(2,5)");
  RamificationResult res;
  auto w = wedge_square(F);
  for (auto& q : w) q = chop(q, tol);
  int wdeg = -1;
  for (const auto& q : w) wdeg = std::max(wdeg, q.degree());
  if (wdeg < 0) {
    res.reducible = true;
    return res;
  }
  const BigFloat merge = ldexp(BigFloat(1L, bits), -(bits / 4));
  if constexpr (scalar_traits<T>::exact) {
    UniPoly<T> g;
    for (const auto& q : w)
      if (!q.is_zero()) g = g.is_zero() ? q.monic() : poly_gcd(g, q);
    const int v = g.valuation();
    if (v > 0) res.divisor.push_back({false, BigComplex::zero(bits), v});
    for (const auto& [fac, m] : detail::squarefree_factors(g.shift_down(v))) {
      auto fc = fac.map([&](const T& x) { return to_complex(x, bits); });
      for (const auto& r : complex_roots(fc, bits)) detail::add_point(res.divisor, r, m, merge);
    }
  } else {
    // Common zeros of the float components: roots of the lowest-degree
    // component that every other component shares, counted with the smallest
    // multiplicity among the components.
    int v = -1;
    for (const auto& q : w)
      if (!q.is_zero()) v = v < 0 ? q.valuation() : std::min(v, q.valuation());
    if (v > 0) res.divisor.push_back({false, BigComplex::zero(bits), v});
    std::vector<std::vector<BigComplex>> roots;
    for (const auto& q : w) {
      if (q.is_zero()) continue;
      auto c = q.shift_down(v).map([&](const T& x) { return to_complex(x, bits); });
      roots.push_back(c.degree() > 0 ? complex_roots(c, bits) : std::vector<BigComplex>{});
    }
    const BigFloat cluster(1e-6, bits);
    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (roots[i].size() < roots[best].size()) best = i;
    std::vector<bool> used(roots[best].size(), false);
    for (std::size_t i = 0; i < roots[best].size(); ++i) {
      if (used[i]) continue;
      const BigComplex r = roots[best][i];
      int m = 1 << 20;
      for (const auto& rs : roots) {
        int cnt = 0;
        for (const auto& x : rs)
          if (abs(x - r) <= cluster) ++cnt;
        m = std::min(m, cnt);
      }
      for (std::size_t j = i; j < roots[best].size(); ++j)
        if (abs(roots[best][j] - r) <= cluster) used[j] = true;
      if (m > 0) res.divisor.push_back({false, r, m});
    }
  }
  const int inf = 2 * (F.degree() - 2) - wdeg;
  if (inf > 0) res.divisor.push_back({true, BigComplex::zero(bits), inf});
  return res;
}

// Support test: every ramified point is within tol of one of `expect` and
// every expected point occurs (nullopt stands for infinity).
inline bool support_equals(const RamificationResult& r, const std::vector<std::optional<BigComplex>>& expect,
                           double tol = 1e-8) {
  auto matches = [&](const RamifiedPoint& p, const std::optional<BigComplex>& e) {
    if (!e) return p.at_infinity;
    return !p.at_infinity && abs(p.z - *e) <= BigFloat(tol, p.z.precision());
  };
  for (const auto& p : r.divisor) {
    bool ok = false;
    for (const auto& e : expect) ok = ok || matches(p, e);
    if (!ok) return false;
  }
  for (const auto& e : expect) {
    bool ok = false;
    for (const auto& p : r.divisor) ok = ok || matches(p, e);
    if (!ok) return false;
  }
  return true;
}

// Standard-parameterization variables of (1,0,a2 z^2,b3 z^3,f4 z^4; 0,1,u1 z,v2 z^2,z3 z^3).
template <class T>
struct JpVariables {
  T alpha2, beta3, phi4, u1, v2, z3;
};

template <class T>
JpVariables<T> jp_variables(const PencilCurve<T>& c) {
  const auto& r = c.rows;
  auto mono_coeff = [](const UniPoly<T>& q, int k) {
    auto p = chop(q);
    for (int i = 0; i <= p.degree(); ++i)
      if (i != k && !is_exact_zero(p[i])) throw argument_error("pencil is not in standard parameterization");
    return k <= p.degree() ? p[k] : q.is_zero() ? T{} : q.lead() * 0;
  };
  auto is_const = [](const UniPoly<T>& q, int v) {
    auto p = chop(q);
    if (v == 0) return p.is_zero();
    return p.degree() == 0 && negligible(p[0] - one_like(p[0]));
  };
  if (!is_const(r[0][0], 1) || !is_const(r[0][1], 0) || !is_const(r[1][0], 0) || !is_const(r[1][1], 1))
    throw argument_error("pencil lacks the leading identity block");
  JpVariables<T> v{mono_coeff(r[0][2], 2), mono_coeff(r[0][3], 3), mono_coeff(r[0][4], 4),
                   mono_coeff(r[1][2], 1), mono_coeff(r[1][3], 2), mono_coeff(r[1][4], 3)};
  return v;
}

struct JpResult {
  bool nonsingular = false;
  std::array<BigFloat, 6> residuals;
};

// Degree criterion plus the six norm equations of the constant-curvature
// system in standard parameterization.
template <class T>
JpResult jp_checks(const PencilCurve<T>& c, int bits = kFloatBits) {
  const auto v = jp_variables(c);
  auto n2 = [&](const T& x) { return magnitude2(x, bits); };
  JpResult out;
  out.nonsingular = c.row_degree(0) + c.row_degree(1) == wedge_pencil(c).degree();
  const BigFloat lhs[6] = {
      n2(v.u1),
      n2(v.v2) + n2(v.alpha2),
      n2(v.z3) + n2(v.beta3),
      n2(v.phi4) + n2(v.alpha2 * v.v2 - v.beta3 * v.u1),
      n2(v.alpha2 * v.z3 - v.phi4 * v.u1),
      n2(v.beta3 * v.z3 - v.phi4 * v.v2),
  };
  const long target[6] = {6, 15, 20, 15, 6, 1};
  for (int i = 0; i < 6; ++i) out.residuals[i] = abs(BigFloat(target[i], bits) - lhs[i]);
  return out;
}

}  // namespace g25
