#pragma once

#include "g25/algebra/unipoly.hpp"
#include "g25/sl2/ebasis.hpp"

#include <array>
#include <vector>

namespace g25 {

// Float-path thresholds for residuals and defects, and the working precision.
inline constexpr double kFloatTolerance = 1e-10;
inline constexpr int kFloatBits = 200;

template <class T>
bool negligible(const T& x, double tol = kFloatTolerance) {
  if constexpr (scalar_traits<T>::exact) {
    return is_exact_zero(x);
  } else {
    return abs(x) <= BigFloat(tol, kMinPrecision);
  }
}

template <class T>
bool negligible(const UniPoly<T>& p, double tol = kFloatTolerance) {
  for (const auto& c : p.coeffs())
    if (!negligible(c, tol)) return false;
  return true;
}

// Largest coefficient modulus of a polynomial.
template <class T>
BigFloat max_abs_coeff(const UniPoly<T>& p, int bits = kFloatBits) {
  BigFloat m(0L, bits);
  for (const auto& c : p.coeffs()) m = max(m, abs(to_complex(c, bits)));
  return m;
}

// Drops leading coefficients below tol so that degrees of float polynomials
// mean something.
template <class T>
UniPoly<T> chop(const UniPoly<T>& p, double tol = kFloatTolerance) {
  if constexpr (scalar_traits<T>::exact) {
    return p;
  } else {
    auto c = p.coeffs();
    for (auto& x : c)
      if (negligible(x, tol)) x = x * 0;
    return UniPoly<T>(std::move(c));
  }
}

// A holomorphic curve z -> [p_01(z) : ... : p_34(z)] in CP^9.
template <class T>
class PlueckerCurve {
 public:
  using Poly = UniPoly<T>;

  explicit PlueckerCurve(std::array<Poly, 10> coords) : p_(std::move(coords)) {
    bool all_zero = true;
    for (const auto& q : p_) all_zero = all_zero && q.is_zero();
    if (all_zero) throw argument_error("Pluecker curve is identically zero");
    normalize();
  }

  // From a monomial list: coordinate k gets coeff[k] z^pow[k].
  static PlueckerCurve from_monomials(const std::array<T, 10>& coeff, const std::array<int, 10>& pow) {
    std::array<Poly, 10> p;
    for (int k = 0; k < 10; ++k) p[k] = Poly::monomial(coeff[k], pow[k]);
    return PlueckerCurve(p);
  }

  const std::array<Poly, 10>& coords() const { return p_; }
  const Poly& operator[](int k) const { return p_[k]; }
  const Poly& at(int i, int j) const { return p_[pair_index(i, j)]; }

  int degree() const {
    int d = 0;
    for (const auto& q : p_) d = std::max(d, chop(q).degree());
    return d;
  }
  T zero() const {
    for (const auto& q : p_)
      if (!q.is_zero()) return q.lead() * 0;
    return T{};
  }

  // The 10-vector of z^k coefficients.
  SkewTensor<T> coefficient(int k) const {
    SkewTensor<T> s;
    for (int r = 0; r < 10; ++r) s.p[r] = k <= p_[r].degree() ? p_[r][k] : zero();
    return s;
  }
  SkewTensor<T> eval(const T& z) const {
    SkewTensor<T> s;
    for (int r = 0; r < 10; ++r) s.p[r] = p_[r].is_zero() ? zero() : p_[r].eval(z);
    return s;
  }

  PlueckerCurve derivative() const {
    std::array<Poly, 10> d;
    for (int r = 0; r < 10; ++r) d[r] = p_[r].derivative();
    return PlueckerCurve(d, raw_tag{});
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<T>()));
    std::array<UniPoly<U>, 10> q;
    for (int r = 0; r < 10; ++r) q[r] = p_[r].map(f);
    return PlueckerCurve<U>(q);
  }

  friend bool operator==(const PlueckerCurve& a, const PlueckerCurve& b) { return a.p_ == b.p_; }

  struct raw_tag {};
  PlueckerCurve(std::array<Poly, 10> coords, raw_tag) : p_(std::move(coords)) {}

 private:
  void normalize() {
    if constexpr (scalar_traits<T>::exact) {
      Poly g;
      for (const auto& q : p_)
        if (!q.is_zero()) g = g.is_zero() ? q.monic() : poly_gcd(g, q);
      if (g.degree() > 0)
        for (auto& q : p_)
          if (!q.is_zero()) q = q / g;
    } else {
      int v = -1;
      for (const auto& q : p_) {
        auto c = chop(q);
        if (c.is_zero()) continue;
        int val = c.valuation();
        v = v < 0 ? val : std::min(v, val);
      }
      if (v > 0)
        for (auto& q : p_) q = q.shift_down(v);
    }
  }
  std::array<Poly, 10> p_;
};

// Two rows of five polynomials.
template <class T>
struct PencilCurve {
  std::array<std::array<UniPoly<T>, 5>, 2> rows;

  static PencilCurve from_coeffs(const std::array<std::array<std::vector<T>, 5>, 2>& c) {
    PencilCurve pc;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 5; ++j) pc.rows[i][j] = UniPoly<T>(c[i][j]);
    return pc;
  }
  int row_degree(int i) const {
    int d = -1;
    for (const auto& q : rows[i]) d = std::max(d, chop(q).degree());
    return d;
  }
};

// p_ij = phi1_i phi2_j - phi1_j phi2_i.
template <class T>
PlueckerCurve<T> wedge_pencil(const PencilCurve<T>& c) {
  std::array<UniPoly<T>, 10> p;
  bool all_zero = true;
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = kPairs[k];
    p[k] = c.rows[0][i] * c.rows[1][j] - c.rows[0][j] * c.rows[1][i];
    all_zero = all_zero && negligible(p[k]);
  }
  if (all_zero) throw argument_error("degenerate pencil: rows are dependent");
  return PlueckerCurve<T>(p);
}

// The five quadratic relations cutting out G(2,5); relation r omits index 4-r.
template <class T>
std::array<UniPoly<T>, 5> pluecker_residual(const PlueckerCurve<T>& F) {
  std::array<UniPoly<T>, 5> out;
  static constexpr std::array<std::array<int, 4>, 5> quads{{{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}}};
  for (int r = 0; r < 5; ++r) {
    auto [a, b, c, d] = quads[r];
    out[r] = F.at(a, b) * F.at(c, d) - F.at(a, c) * F.at(b, d) + F.at(a, d) * F.at(b, c);
  }
  return out;
}

template <class T>
BigFloat pluecker_residual_max(const PlueckerCurve<T>& F, int bits = kFloatBits) {
  BigFloat m(0L, bits);
  for (const auto& r : pluecker_residual(F)) m = max(m, max_abs_coeff(r, bits));
  return m;
}

template <class T>
bool in_grassmannian(const PlueckerCurve<T>& F, double tol = kFloatTolerance) {
  for (const auto& r : pluecker_residual(F))
    if (!negligible(r, tol)) return false;
  return true;
}

// Coordinates of a constant point sum a_i E_i, as a degree-0 curve.
template <class T>
PlueckerCurve<T> constant_curve(const SkewTensor<T>& s) {
  std::array<UniPoly<T>, 10> p;
  for (int k = 0; k < 10; ++k) p[k] = UniPoly<T>(std::vector<T>{s.p[k]});
  return PlueckerCurve<T>(p);
}

// F -> R.F for a 5x5 matrix acting through wedge^2.
template <class T>
PlueckerCurve<T> act_wedge2(const Matrix<T>& r, const PlueckerCurve<T>& F) {
  const int d = F.degree();
  std::array<std::vector<T>, 10> c;
  for (int k = 0; k <= d; ++k) {
    auto s = wedge_action(r, F.coefficient(k));
    for (int i = 0; i < 10; ++i) c[i].push_back(s.p[i]);
  }
  std::array<UniPoly<T>, 10> p;
  for (int i = 0; i < 10; ++i) p[i] = UniPoly<T>(c[i]);
  return PlueckerCurve<T>(p);
}

// w^deg F(1/w) followed by the index reversal e_i -> e_{4-i}.
template <class T>
PlueckerCurve<T> invert_parameter(const PlueckerCurve<T>& F) {
  const int d = F.degree();
  std::array<UniPoly<T>, 10> p;
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = kPairs[k];
    p[pair_index(4 - j, 4 - i)] = chop(F[k]).reversed(d);
  }
  return PlueckerCurve<T>(p);
}

// p_ij(z) -> d_i d_j p_ij(s z).
template <class T>
PlueckerCurve<T> transform_diagonal(const PlueckerCurve<T>& F, const std::array<T, 5>& d, const T& s) {
  std::array<UniPoly<T>, 10> p;
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = kPairs[k];
    std::vector<T> c = F[k].coeffs();
    T pw = one_like(s);
    for (auto& x : c) {
      x = x * d[i] * d[j] * pw;
      pw = pw * s;
    }
    p[k] = UniPoly<T>(c);
  }
  return PlueckerCurve<T>(p);
}

// Equality of curves up to one overall nonzero constant.
template <class T>
bool projectively_same(const PlueckerCurve<T>& a, const PlueckerCurve<T>& b, double tol = kFloatTolerance) {
  std::vector<T> x, y;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) {
    auto sa = a.coefficient(k), sb = b.coefficient(k);
    x.insert(x.end(), sa.p.begin(), sa.p.end());
    y.insert(y.end(), sb.p.begin(), sb.p.end());
  }
  if constexpr (scalar_traits<T>::exact) {
    return projectively_equal(x, y);
  } else {
    std::size_t k = 0;
    BigFloat best(0L, kFloatBits);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (abs(x[i]) > best) best = abs(x[i]), k = i;
    if (negligible(y[k], tol)) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!negligible(x[i] * y[k] - y[i] * x[k], tol)) return false;
    return true;
  }
}

}  // namespace g25
