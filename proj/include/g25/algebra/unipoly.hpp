#pragma once

#include "g25/algebra/scalar.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace g25 {

// Dense univariate polynomial; c[k] is the coefficient of x^k.  The zero
// polynomial has no stored coefficients and degree kZeroDegree.
template <class T>
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit UniPoly(const T& constant) : c_{constant} { trim(); }

  static UniPoly monomial(const T& coef, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, zero_like(coef));
    c[k] = coef;
    return UniPoly(std::move(c));
  }
  // Coefficients listed from the highest power down.
  static UniPoly from_descending(const std::vector<T>& hi_first) {
    return UniPoly(std::vector<T>(hi_first.rbegin(), hi_first.rend()));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T operator[](int k) const { return (k >= 0 && k <= degree()) ? c_[k] : T{}; }
  const T& lead() const { return c_.back(); }

  // Lowest index with a nonzero coefficient.
  int valuation() const {
    for (int k = 0; k <= degree(); ++k)
      if (!is_exact_zero(c_[k])) return k;
    return kZeroDegree;
  }

  template <class U>
  U eval(const U& x) const {
    if (c_.empty()) return x * 0;
    U acc = x * 0 + c_.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * x + c_[k];
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  UniPoly derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<T> d(c_.size() - 1);
    for (int k = 1; k <= degree(); ++k) d[k - 1] = c_[k] * k;
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    std::vector<T> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
    return UniPoly(std::move(d));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k < a.c_.size() && k < b.c_.size())
        d[k] = a.c_[k] + b.c_[k];
      else
        d[k] = k < a.c_.size() ? a.c_[k] : b.c_[k];
    }
    return UniPoly(std::move(d));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<T> d(a.c_.size() + b.c_.size() - 1);
    std::vector<bool> set(d.size(), false);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_exact_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_exact_zero(b.c_[j])) continue;
        if (set[i + j])
          d[i + j] += a.c_[i] * b.c_[j];
        else {
          d[i + j] = a.c_[i] * b.c_[j];
          set[i + j] = true;
        }
      }
    }
    return UniPoly(std::move(d));
  }
  friend UniPoly operator*(const UniPoly& a, const T& s) {
    std::vector<T> d(a.c_.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.c_[k] * s;
    return UniPoly(std::move(d));
  }
  friend UniPoly operator*(const T& s, const UniPoly& a) { return a * s; }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Euclidean division over a field.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw argument_error("polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<T> r = c_;
    std::vector<T> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const T inv_lead = one_like(d.lead()) / d.lead();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      T f = r[k + d.degree()] * inv_lead;
      q[k] = f;
      if (is_exact_zero(f)) continue;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * d.c_[j];
      r[k + d.degree()] = T{};
    }
    r.resize(static_cast<std::size_t>(d.degree()));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return a.divmod(b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return a.divmod(b).second; }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * (one_like(lead()) / lead());
  }

  // Coefficient reversal x^deg * p(1/x).
  UniPoly reversed(int as_degree) const {
    std::vector<T> d(static_cast<std::size_t>(as_degree) + 1);
    for (int k = 0; k <= degree(); ++k) d[as_degree - k] = c_[k];
    return UniPoly(std::move(d));
  }

  // Divide by x^k (the low coefficients must vanish exactly).
  UniPoly shift_down(int k) const {
    if (k <= 0) return *this;
    if (k > degree()) return UniPoly();
    return UniPoly(std::vector<T>(c_.begin() + k, c_.end()));
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<T>()));
    std::vector<U> d;
    d.reserve(c_.size());
    for (const auto& x : c_) d.push_back(f(x));
    return UniPoly<U>(std::move(d));
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (is_exact_zero(c_[k])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + scalar_str(c_[k]) + ")";
      if (k >= 1) out += "*" + var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static T zero_like(const T& x) { return x * T{}; }
  static std::string scalar_str(const Rational& x) { return to_string(x); }
  static std::string scalar_str(const BigFloat& x) { return x.str(20); }
  static std::string scalar_str(const BigComplex& x) { return x.re.str(20) + "," + x.im.str(20); }
  template <int... Ds>
  static std::string scalar_str(const QuadExt<Ds...>& x) {
    return x.str();
  }

  void trim() {
    while (!c_.empty() && is_exact_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
UniPoly<T> poly_gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Pow by squaring.
template <class T>
UniPoly<T> poly_pow(UniPoly<T> base, int e) {
  if (base.is_zero()) return UniPoly<T>();
  UniPoly<T> out(one_like(base.lead()));
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Rational polynomial scaled to a primitive integer polynomial with positive
// leading coefficient; roots and sign pattern are unchanged up to the sign.
inline UniPoly<Rational> primitive_part(const UniPoly<Rational>& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    l = boost::multiprecision::lcm(l, rat_den(c));
  }
  std::vector<Rational> v;
  for (const auto& c : p.coeffs()) {
    v.push_back(c * l);
    g = boost::multiprecision::gcd(g, rat_num(v.back()));
  }
  if (g == 0) g = 1;
  if (p.lead() < 0) g = -g;
  for (auto& c : v) c /= Rational(g);
  return UniPoly<Rational>(std::move(v));
}

// p / gcd(p, p'): same roots, all simple.
inline UniPoly<Rational> squarefree_part(const UniPoly<Rational>& p) {
  if (p.degree() < 1) return p;
  auto g = poly_gcd(p, p.derivative());
  return primitive_part(p / g);
}

}  // namespace g25
