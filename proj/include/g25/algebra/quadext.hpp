#pragma once

// Multiquadratic number fields Q(sqrt(D1), ..., sqrt(Dk)) with exact rational
// coordinates on the product basis.  A generator of -1 plays the role of i and
// complex conjugation flips its sign; all other generators are real and positive.

#include "g25/algebra/bigcomplex.hpp"
#include "g25/algebra/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace g25 {

template <int... Ds>
class QuadExt {
 public:
  static constexpr int kGens = sizeof...(Ds);
  static constexpr int kDim = 1 << kGens;
  static constexpr std::array<int, kGens> kD{Ds...};

  QuadExt() = default;
  QuadExt(const Rational& r) { c_[0] = r; }  // NOLINT: implicit embedding of Q
  QuadExt(long v) { c_[0] = Rational(v); }   // NOLINT
  QuadExt(int v) { c_[0] = Rational(v); }    // NOLINT

  static QuadExt basis(int mask, const Rational& coef = Rational(1)) {
    QuadExt q;
    q.c_[mask] = coef;
    return q;
  }
  // sqrt(D_k) for the k-th generator.
  static QuadExt gen(int k) { return basis(1 << k); }
  static constexpr int gen_index(int d) {
    for (int k = 0; k < kGens; ++k)
      if (kD[k] == d) return k;
    return -1;
  }
  static constexpr bool has_i() { return gen_index(-1) >= 0; }
  static QuadExt imag_unit() {
    static_assert(has_i(), "field has no imaginary unit");
    return gen(gen_index(-1));
  }

  // Exact square root of a rational if it lies in the field.
  static std::optional<QuadExt> sqrt_of(const Rational& r) {
    if (r == 0) return QuadExt();
    for (int mask = 0; mask < kDim; ++mask) {
      Rational prod(1);
      for (int k = 0; k < kGens; ++k)
        if (mask & (1 << k)) prod *= kD[k];
      Rational q = r / prod, root;
      if (rational_sqrt(q, root)) return basis(mask, root);
    }
    return std::nullopt;
  }
  static QuadExt sqrt_or_throw(const Rational& r) {
    auto s = sqrt_of(r);
    if (!s) throw argument_error("square root of " + to_string(r) + " is outside the exact field");
    return *s;
  }

  const Rational& coef(int mask) const { return c_[mask]; }
  Rational& coef(int mask) { return c_[mask]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int m = 1; m < kDim; ++m)
      if (c_[m] != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  QuadExt operator-() const {
    QuadExt out;
    for (int m = 0; m < kDim; ++m) out.c_[m] = -c_[m];
    return out;
  }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    QuadExt out;
    for (int m = 0; m < kDim; ++m) out.c_[m] = a.c_[m] + b.c_[m];
    return out;
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    QuadExt out;
    for (int m = 0; m < kDim; ++m) out.c_[m] = a.c_[m] - b.c_[m];
    return out;
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    QuadExt out;
    for (int i = 0; i < kDim; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < kDim; ++j) {
        if (b.c_[j] == 0) continue;
        out.c_[i ^ j] += a.c_[i] * b.c_[j] * kFactor[i & j];
      }
    }
    return out;
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }
  QuadExt& operator+=(const QuadExt& b) { return *this = *this + b; }
  QuadExt& operator-=(const QuadExt& b) { return *this = *this - b; }
  QuadExt& operator*=(const QuadExt& b) { return *this = *this * b; }
  QuadExt& operator/=(const QuadExt& b) { return *this = *this / b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  // Flip the sign of every coordinate involving generator k.
  QuadExt galois(int k) const {
    QuadExt out = *this;
    for (int m = 0; m < kDim; ++m)
      if (m & (1 << k)) out.c_[m] = -out.c_[m];
    return out;
  }

  QuadExt inverse() const {
    if (is_zero()) throw numeric_error("division by zero in exact field");
    QuadExt num(1), y = *this;
    for (int k = 0; k < kGens; ++k) {
      QuadExt c = y.galois(k);
      num *= c;
      y *= c;
    }
    return num * QuadExt(Rational(1) / y.c_[0]);
  }

  BigComplex to_complex(int bits) const {
    BigFloat re(0L, bits), im(0L, bits);
    for (int m = 0; m < kDim; ++m) {
      if (c_[m] == 0) continue;
      BigFloat mag(c_[m], bits);
      bool imaginary = false;
      for (int k = 0; k < kGens; ++k) {
        if (!(m & (1 << k))) continue;
        if (kD[k] == -1)
          imaginary = true;
        else if (kD[k] < 0)
          throw argument_error("only -1 may be a negative generator");
        else
          mag = mag * sqrt(BigFloat(long(kD[k]), bits));
      }
      if (imaginary)
        im = im + mag;
      else
        re = re + mag;
    }
    return {re, im};
  }

  std::string str() const {
    std::string out;
    for (int m = 0; m < kDim; ++m) {
      if (c_[m] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c_[m]) + ")";
      for (int k = 0; k < kGens; ++k)
        if (m & (1 << k)) out += kD[k] == -1 ? "*i" : "*sqrt(" + std::to_string(kD[k]) + ")";
    }
    return out.empty() ? "0" : out;
  }

 private:
  static constexpr std::array<long, kDim> make_factors() {
    std::array<long, kDim> f{};
    for (int m = 0; m < kDim; ++m) {
      long p = 1;
      for (int k = 0; k < kGens; ++k)
        if (m & (1 << k)) p *= kD[k];
      f[m] = p;
    }
    return f;
  }
  static constexpr std::array<long, kDim> kFactor = make_factors();

  std::array<Rational, kDim> c_{};
};

template <int... Ds>
QuadExt<Ds...> conj(const QuadExt<Ds...>& x) {
  constexpr int k = QuadExt<Ds...>::gen_index(-1);
  if constexpr (k >= 0)
    return x.galois(k);
  else
    return x;
}

// The working exact field: contains i, sqrt2, sqrt3, sqrt5 and so every
// constant of the E-basis, the isotropy group and the 24th roots of unity.
using Qx = QuadExt<-1, 2, 3, 5>;
// Real field for the second exact example.
using Q79 = QuadExt<79>;

// exp(2 pi i k / 24) exactly.
inline Qx root_of_unity24(int k) {
  k = ((k % 24) + 24) % 24;
  // zeta = cos(pi/12) + i sin(pi/12) = ((sqrt6 + sqrt2) + i (sqrt6 - sqrt2)) / 4
  const Qx s2 = Qx::gen(1), s6 = Qx::gen(2) * Qx::gen(1);
  const Qx zeta = (s6 + s2 + Qx::imag_unit() * (s6 - s2)) * Qx(make_rational(1, 4));
  Qx out(1);
  for (int j = 0; j < k; ++j) out *= zeta;
  return out;
}

}  // namespace g25
