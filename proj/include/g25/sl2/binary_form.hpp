#pragma once

#include "g25/algebra/matrix.hpp"

#include <vector>

namespace g25 {

template <class T>
struct GroupElement {
  T a, b, c, d;

  T det() const { return a * d - b * c; }
  static GroupElement identity(const T& one) { return {one, one * 0, one * 0, one}; }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  GroupElement inverse() const {
    T dt = det();
    if (is_exact_zero(dt)) throw argument_error("singular group element");
    T inv = one_like(dt) / dt;
    return {d * inv, -b * inv, -c * inv, a * inv};
  }
  // Equality in PGL2.
  bool projectively_equal_to(const GroupElement& o) const {
    return g25::projectively_equal(std::vector<T>{a, b, c, d}, std::vector<T>{o.a, o.b, o.c, o.d});
  }
  template <class U, class F>
  GroupElement<U> map(F&& f) const {
    return {f(a), f(b), f(c), f(d)};
  }
};

namespace detail {

// Plain coefficients (index k multiplies u^(n-k) v^k) of a product of forms.
template <class T>
std::vector<T> form_product(const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<T> out(x.size() + y.size() - 1, x[0] * 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_exact_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
  }
  return out;
}

// d/du and d/dv on plain coefficients of a degree-n form.
template <class T>
std::vector<T> form_du(const std::vector<T>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return {f[0] * 0};
  std::vector<T> out;
  for (int k = 0; k < n; ++k) out.push_back(f[k] * (n - k));
  return out;
}
template <class T>
std::vector<T> form_dv(const std::vector<T>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return {f[0] * 0};
  std::vector<T> out;
  for (int k = 1; k <= n; ++k) out.push_back(f[k] * k);
  return out;
}

}  // namespace detail

// A binary form of degree n stored in the normalized basis
// e_l = sqrt(C(n,l)) u^(n-l) v^l.
template <class T>
struct BinaryForm {
  int n = 0;
  std::vector<T> c;

  BinaryForm() = default;
  BinaryForm(int degree, std::vector<T> coeffs) : n(degree), c(std::move(coeffs)) {
    if (n < 0 || static_cast<int>(c.size()) != n + 1) throw argument_error("binary form needs n+1 coefficients");
  }

  // From plain monomial coefficients p[l] of u^(n-l) v^l.
  static BinaryForm from_plain(const std::vector<T>& p) {
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<T> c;
    for (int l = 0; l <= n; ++l) c.push_back(p[l] / sqrt_rat(binomial(n, l), p[l]));
    return BinaryForm(n, std::move(c));
  }
  std::vector<T> plain() const {
    std::vector<T> p;
    for (int l = 0; l <= n; ++l) p.push_back(c[l] * sqrt_rat(binomial(n, l), c[l]));
    return p;
  }
  friend bool operator==(const BinaryForm& x, const BinaryForm& y) { return x.n == y.n && x.c == y.c; }
};

// Matrix of f -> (g.f)(u,v) = f(g^{-1}(u,v)) on V_n in the normalized basis;
// column l holds the coordinates of g.e_l.  An exact homomorphism.
template <class T>
Matrix<T> rep_matrix(const GroupElement<T>& g, int n) {
  if (n < 0) throw argument_error("negative representation degree");
  const T det = g.det();
  if (is_exact_zero(det)) throw argument_error("rep_matrix of a singular element");
  const T zero = det * 0, one = one_like(det);
  const T inv_det_n = one / [&] {
    T p = one;
    for (int i = 0; i < n; ++i) p = p * det;
    return p;
  }();
  // g^{-1} substitution up to 1/det: u -> d u - b v, v -> -c u + a v.
  const std::vector<T> lu{g.d, -g.b}, lv{-g.c, g.a};
  Matrix<T> m(n + 1, n + 1, zero);
  for (int l = 0; l <= n; ++l) {
    std::vector<T> p{one};
    for (int i = 0; i < n - l; ++i) p = detail::form_product(p, lu);
    for (int i = 0; i < l; ++i) p = detail::form_product(p, lv);
    const T scale_l = sqrt_rat(binomial(n, l), one);
    for (int k = 0; k <= n; ++k) m(k, l) = p[k] * scale_l / sqrt_rat(binomial(n, k), one) * inv_det_n;
  }
  return m;
}

template <class T>
BinaryForm<T> act(const GroupElement<T>& g, const BinaryForm<T>& f) {
  return BinaryForm<T>(f.n, rep_matrix(g, f.n).apply(f.c));
}

// (g.f)(u,v) = f(g^{-1}(u,v)) directly on plain coefficients; stays inside
// the coefficient field of g and f.
template <class T>
std::vector<T> act_plain(const GroupElement<T>& g, const std::vector<T>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const T det = g.det();
  if (is_exact_zero(det)) throw argument_error("action of a singular element");
  const T one = one_like(det);
  T inv_det_n = one;
  for (int i = 0; i < n; ++i) inv_det_n = inv_det_n / det;
  const std::vector<T> lu{g.d, -g.b}, lv{-g.c, g.a};
  std::vector<T> out(f.size(), det * 0);
  for (int l = 0; l <= n; ++l) {
    if (is_exact_zero(f[l])) continue;
    std::vector<T> p{f[l] * inv_det_n};
    for (int i = 0; i < n - l; ++i) p = detail::form_product(p, lu);
    for (int i = 0; i < l; ++i) p = detail::form_product(p, lv);
    for (int k = 0; k <= n; ++k) out[k] = out[k] + p[k];
  }
  return out;
}

// p-th transvectant on plain coefficients, weight ((m-p)!/m!)((n-p)!/n!);
// any 0 <= p <= min(m, n).
template <class T>
std::vector<T> transvectant_plain(const std::vector<T>& fp, const std::vector<T>& hp, int p) {
  const int m = static_cast<int>(fp.size()) - 1, n = static_cast<int>(hp.size()) - 1;
  if (m < 0 || n < 0) throw argument_error("transvectant of an empty form");
  if (p < 0 || p > m || p > n) throw argument_error("transvectant order exceeds a degree");
  const T zero = fp[0] * 0;
  auto partial = [](std::vector<T> x, int du, int dv) {
    for (int i = 0; i < du; ++i) x = detail::form_du(x);
    for (int j = 0; j < dv; ++j) x = detail::form_dv(x);
    return x;
  };
  std::vector<T> acc(static_cast<std::size_t>(m + n - 2 * p) + 1, zero);
  for (int i = 0; i <= p; ++i) {
    auto term = detail::form_product(partial(fp, p - i, i), partial(hp, i, p - i));
    Rational w = binomial(p, i);
    if (i % 2) w = -w;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = acc[k] + term[k] * w;
  }
  Rational scale = Rational(factorial(m - p), factorial(m)) * Rational(factorial(n - p), factorial(n));
  for (auto& x : acc) x = x * scale;
  return acc;
}

template <class T>
BinaryForm<T> transvectant(const BinaryForm<T>& f, const BinaryForm<T>& h, int p) {
  return BinaryForm<T>::from_plain(transvectant_plain(f.plain(), h.plain(), p));
}

}  // namespace g25
