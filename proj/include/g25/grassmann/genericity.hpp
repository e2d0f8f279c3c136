#pragma once

#include "g25/grassmann/curve.hpp"

#include <Eigen/SVD>

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g25 {

namespace detail {

// Exponent vectors of degree d in three variables, in a fixed order.
inline std::vector<std::array<int, 3>> ternary_monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

inline int ternary_index(const std::array<int, 3>& e) {
  static const auto build = [] {
    std::map<std::array<int, 3>, int> m;
    for (int d = 0; d <= 4; ++d) {
      auto v = ternary_monomials(d);
      for (int i = 0; i < static_cast<int>(v.size()); ++i) m[v[i]] = i;
    }
    return m;
  }();
  return build.at(e);
}

}  // namespace detail

// A ternary quadratic form sum c_e lambda^e0 mu^e1 tau^e2 over the six
// monomials of degree 2.
template <class T>
struct TernaryQuadric {
  std::array<T, 6> c;

  T eval(const std::array<T, 3>& x) const {
    const auto mons = detail::ternary_monomials(2);
    T acc = c[0] * 0;
    for (int i = 0; i < 6; ++i) {
      T term = c[i];
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < mons[i][v]; ++k) term = term * x[v];
      acc = acc + term;
    }
    return acc;
  }
};

template <class T>
struct GenericityResult {
  bool generic = false;
  bool exact = false;
  std::string method;
  double confidence = 0;
  std::optional<std::array<T, 3>> witness;
};

// The five signed diagonal 4x4 Pfaffians of lambda A + mu B + tau C.
template <class T>
std::array<TernaryQuadric<T>, 5> center_map(const SkewTensor<T>& A, const SkewTensor<T>& B, const SkewTensor<T>& C) {
  const T zero = A.p[0] * 0;
  // Entry (i, j) of the pencil as a linear form.
  auto lin = [&](int i, int j) { return std::array<T, 3>{A.at(i, j), B.at(i, j), C.at(i, j)}; };
  auto mul = [&](const std::array<T, 3>& x, const std::array<T, 3>& y) {
    std::array<T, 6> q;
    q.fill(zero);
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) {
        std::array<int, 3> e{0, 0, 0};
        ++e[u];
        ++e[v];
        q[detail::ternary_index(e)] = q[detail::ternary_index(e)] + x[u] * y[v];
      }
    return q;
  };
  std::array<TernaryQuadric<T>, 5> out;
  for (int skip = 0; skip < 5; ++skip) {
    std::array<int, 4> idx{};
    for (int i = 0, k = 0; i < 5; ++i)
      if (i != skip) idx[k++] = i;
    auto [a, b, c, d] = idx;
    auto t1 = mul(lin(a, b), lin(c, d)), t2 = mul(lin(a, c), lin(b, d)), t3 = mul(lin(a, d), lin(b, c));
    for (int m = 0; m < 6; ++m) {
      T v = t1[m] - t2[m] + t3[m];
      out[skip].c[m] = skip % 2 ? -v : v;
    }
  }
  return out;
}

// Degree-4 Macaulay matrix of five ternary quadrics: 30 rows, 15 columns.
template <class T>
Matrix<T> macaulay4(const std::array<TernaryQuadric<T>, 5>& q) {
  const auto m2 = detail::ternary_monomials(2);
  Matrix<T> m(30, 15, q[0].c[0] * 0);
  int row = 0;
  for (const auto& f : q)
    for (const auto& s : m2) {
      for (int i = 0; i < 6; ++i) {
        std::array<int, 3> e{m2[i][0] + s[0], m2[i][1] + s[1], m2[i][2] + s[2]};
        m(row, detail::ternary_index(e)) = f.c[i];
      }
      ++row;
    }
  return m;
}

// Does every nonzero matrix in the net lambda A + mu B + tau C have rank 4?
// The five Pfaffian quadrics have no common projective zero exactly when
// their degree-4 Macaulay matrix has full rank 15.  Exact inputs are decided
// exactly; a witness is searched on the integer grid [-samples, samples]^3.
// Float inputs use the singular values of the same matrix.
template <class T>
GenericityResult<T> center_genericity(const SkewTensor<T>& A, const SkewTensor<T>& B, const SkewTensor<T>& C,
                                      int samples = 4) {
  Matrix<T> abc(3, 10, A.p[0] * 0);
  for (int k = 0; k < 10; ++k) abc(0, k) = A.p[k], abc(1, k) = B.p[k], abc(2, k) = C.p[k];
  const auto q = center_map(A, B, C);
  const Matrix<T> mac = macaulay4(q);
  GenericityResult<T> res;
  if constexpr (scalar_traits<T>::exact) {
    if (exact_rank(abc) < 3) throw argument_error("center_genericity: A, B, C are dependent");
    res.exact = true;
    res.method = "macaulay-exact";
    res.generic = exact_rank(mac) == 15;
    res.confidence = 1;
    if (!res.generic) {
      const T one = one_like(A.p[0]);
      for (int s = 1; s <= samples && !res.witness; ++s)
        for (int a = -s; a <= s && !res.witness; ++a)
          for (int b = -s; b <= s && !res.witness; ++b)
            for (int c = -s; c <= s && !res.witness; ++c) {
              if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != s) continue;
              std::array<T, 3> x{embed(Rational(a), one), embed(Rational(b), one), embed(Rational(c), one)};
              bool all = true;
              for (const auto& f : q) all = all && is_exact_zero(f.eval(x));
              if (all) res.witness = x;
            }
    }
  } else {
    auto to_eigen = [](const Matrix<T>& m) {
      Eigen::MatrixXcd e(m.rows(), m.cols());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
          auto z = to_complex(m(i, j), 64);
          e(i, j) = {z.re.to_double(), z.im.to_double()};
        }
      return e;
    };
    Eigen::JacobiSVD<Eigen::MatrixXcd> in(to_eigen(abc));
    const auto& si = in.singularValues();
    if (si(2) <= 1e-12 * si(0)) throw argument_error("center_genericity: A, B, C are dependent");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(mac));
    const auto& sv = svd.singularValues();
    const double ratio = sv(0) > 0 ? sv(14) / sv(0) : 0;
    res.method = "macaulay-svd";
    res.generic = ratio > 1e-10;
    res.confidence = ratio;
  }
  return res;
}

// The dual system: three skew pairing matrices sqrt6 p03 - 3 p12,
// 2 p04 - p13, sqrt6 p14 - 3 p23.
template <class T>
std::array<SkewTensor<T>, 3> dual_system(const T& like) {
  std::array<SkewTensor<T>, 3> m;
  for (auto& s : m) s.p.fill(like * 0);
  const T r6 = sqrt_rat(6, like), one = one_like(like);
  m[0].p[pair_index(0, 3)] = r6;
  m[0].p[pair_index(1, 2)] = one * -3;
  m[1].p[pair_index(0, 4)] = one * 2;
  m[1].p[pair_index(1, 3)] = -one;
  m[2].p[pair_index(1, 4)] = r6;
  m[2].p[pair_index(2, 3)] = one * -3;
  return m;
}

}  // namespace g25
