#pragma once

#include "g25/sl2/binary_form.hpp"

#include <array>
#include <utility>
#include <vector>

namespace g25 {

// Index of e_i ^ e_j (i < j) in the lexicographic order 01,02,03,04,12,...,34.
constexpr int pair_index(int i, int j) {
  int idx = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  return -1;
}
constexpr std::array<std::pair<int, int>, 10> kPairs{{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                     {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// A point of wedge^2 C^5: a 5x5 antisymmetric matrix kept as its ten
// upper-triangular entries p_ij in lexicographic order.
template <class T>
struct SkewTensor {
  std::array<T, 10> p{};

  T at(int i, int j) const {
    if (i == j) return p[0] * 0;
    return i < j ? p[pair_index(i, j)] : -p[pair_index(j, i)];
  }
  Matrix<T> matrix() const {
    Matrix<T> m(5, 5, p[0] * 0);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = at(i, j);
    return m;
  }
  static SkewTensor from_matrix(const Matrix<T>& m) {
    if (m.rows() != 5 || m.cols() != 5) throw argument_error("skew tensor needs a 5x5 matrix");
    SkewTensor s;
    for (int k = 0; k < 10; ++k) {
      auto [i, j] = kPairs[k];
      if constexpr (scalar_traits<T>::exact)
        if (m(i, j) != -m(j, i)) throw argument_error("matrix is not antisymmetric");
      s.p[k] = m(i, j);
    }
    return s;
  }
  std::vector<T> vec() const { return std::vector<T>(p.begin(), p.end()); }

  friend SkewTensor operator+(const SkewTensor& x, const SkewTensor& y) {
    SkewTensor s;
    for (int k = 0; k < 10; ++k) s.p[k] = x.p[k] + y.p[k];
    return s;
  }
  friend SkewTensor operator*(const SkewTensor& x, const T& a) {
    SkewTensor s;
    for (int k = 0; k < 10; ++k) s.p[k] = x.p[k] * a;
    return s;
  }
  friend bool operator==(const SkewTensor& x, const SkewTensor& y) { return x.p == y.p; }
};

// Hermitian pairing sum_{i<j} conj(x_ij) y_ij.
template <class T>
T hermitian(const SkewTensor<T>& x, const SkewTensor<T>& y) {
  T acc = x.p[0] * 0;
  for (int k = 0; k < 10; ++k) acc = acc + conj(x.p[k]) * y.p[k];
  return acc;
}

// The orthonormal basis E_0..E_6 of the V_6 summand of wedge^2 C^5.
template <class T>
std::array<SkewTensor<T>, 7> e_basis(const T& like) {
  const T zero = like * 0, one = one_like(like);
  std::array<SkewTensor<T>, 7> e;
  for (auto& s : e) s.p.fill(zero);
  e[0].p[pair_index(0, 1)] = one;
  e[1].p[pair_index(0, 2)] = one;
  e[2].p[pair_index(0, 3)] = sqrt_rat(make_rational(3, 5), like);
  e[2].p[pair_index(1, 2)] = sqrt_rat(make_rational(2, 5), like);
  e[3].p[pair_index(0, 4)] = sqrt_rat(make_rational(1, 5), like);
  e[3].p[pair_index(1, 3)] = sqrt_rat(make_rational(4, 5), like);
  e[4].p[pair_index(1, 4)] = sqrt_rat(make_rational(3, 5), like);
  e[4].p[pair_index(2, 3)] = sqrt_rat(make_rational(2, 5), like);
  e[5].p[pair_index(2, 4)] = one;
  e[6].p[pair_index(3, 4)] = one;
  return e;
}

// sum_i a_i E_i for normalized sextic coordinates a.
template <class T>
SkewTensor<T> vector_to_skew(const std::vector<T>& a) {
  if (a.size() != 7) throw argument_error("V_6 vectors have seven coordinates");
  auto e = e_basis(a[0]);
  SkewTensor<T> s;
  s.p.fill(a[0] * 0);
  for (int i = 0; i < 7; ++i) s = s + e[i] * a[i];
  return s;
}

template <class T>
SkewTensor<T> form_to_skew(const BinaryForm<T>& f) {
  if (f.n != 6) throw argument_error("form_to_skew needs a sextic");
  return vector_to_skew(f.c);
}

// wedge^2 action R.S = R S R^t of a 5x5 matrix on a skew tensor.
template <class T>
SkewTensor<T> wedge_action(const Matrix<T>& r, const SkewTensor<T>& s) {
  if (r.rows() != 5 || r.cols() != 5) throw argument_error("wedge action needs a 5x5 matrix");
  SkewTensor<T> out;
  for (int a = 0; a < 10; ++a) {
    auto [i, j] = kPairs[a];
    T acc = s.p[0] * 0;
    for (int b = 0; b < 10; ++b) {
      if (is_exact_zero(s.p[b])) continue;
      auto [k, l] = kPairs[b];
      acc = acc + (r(i, k) * r(j, l) - r(i, l) * r(j, k)) * s.p[b];
    }
    out.p[a] = acc;
  }
  return out;
}

}  // namespace g25
