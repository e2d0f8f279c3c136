#pragma once

#include "g25/algebra/multipoly.hpp"

#include <utility>
#include <vector>

namespace g25 {

// Fraction-free (Bareiss) determinant over Q[vars]; every division is exact.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(vars, Rational(1));
  MultiPoly prev = MultiPoly::constant(vars, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(vars);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Sylvester matrix of p and q in the given variable; entries are
// polynomials in the remaining variables.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& p, const MultiPoly& q, int var) {
  const int m = p.degree_in(var), n = q.degree_in(var);
  const auto& vars = p.vars();
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + (m - k)] = p.coefficient_in(var, k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + (n - k)] = q.coefficient_in(var, k);
  return s;
}

// Resultant with respect to `var`, as an exact polynomial in the other
// variables (the variable set is kept; `var` simply no longer occurs).
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  if (p.vars() != q.vars()) throw argument_error("resultant of polynomials over different variable sets");
  const int v = p.index_of(var);
  const int m = p.degree_in(v), n = q.degree_in(v);
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.vars());
  if (m <= 0 && n <= 0) throw argument_error("resultant variable '" + var + "' occurs in neither polynomial");
  if (m == 0) return p.pow(n);
  if (n == 0) return q.pow(m);
  return bareiss_determinant(sylvester_matrix(p, q, v), p.vars());
}

// Univariate convenience wrapper: Res(p, q) in Q.
inline Rational resultant(const UniPoly<Rational>& p, const UniPoly<Rational>& q) {
  const std::vector<std::string> vars{"x"};
  auto r = resultant(MultiPoly::from_univariate(p, vars, "x"), MultiPoly::from_univariate(q, vars, "x"), "x");
  return r.is_zero() ? Rational(0) : r.terms().begin()->second;
}

}  // namespace g25
