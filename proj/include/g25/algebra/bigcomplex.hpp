#pragma once

#include "g25/algebra/bigfloat.hpp"

#include <ostream>

namespace g25 {

struct BigComplex {
  BigFloat re, im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(0L, r.precision()) {}
  BigComplex(const Rational& r, int bits) : re(r, bits), im(0L, bits) {}
  BigComplex(long r, int bits) : re(r, bits), im(0L, bits) {}
  BigComplex(double r, double i, int bits) : re(r, bits), im(i, bits) {}

  int precision() const { return std::max(re.precision(), im.precision()); }
  BigComplex with_precision(int bits) const { return {re.with_precision(bits), im.with_precision(bits)}; }

  static BigComplex zero(int bits) { return BigComplex(0L, bits); }
  static BigComplex one(int bits) { return BigComplex(1L, bits); }
  static BigComplex i(int bits) { return {BigFloat(0L, bits), BigFloat(1L, bits)}; }
  static BigComplex polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }
  static BigComplex expi(const BigFloat& theta) { return {cos(theta), sin(theta)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex operator-() const { return {-re, -im}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw numeric_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {a.re * s, a.im * s}; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& s) { return {a.re / s, a.im / s}; }
  friend BigComplex operator+(const BigComplex& a, const BigFloat& s) { return {a.re + s, a.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigFloat& s) { return {a.re - s, a.im}; }
  friend BigComplex operator*(const BigComplex& a, const Rational& s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(const Rational& s, const BigComplex& a) { return {a.re * s, a.im * s}; }
  friend BigComplex operator/(const BigComplex& a, const Rational& s) { return {a.re / s, a.im / s}; }
  friend BigComplex operator*(const BigComplex& a, long s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(long s, const BigComplex& a) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(const BigComplex& a, int s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(int s, const BigComplex& a) { return {a.re * s, a.im * s}; }
  friend BigComplex operator+(const BigComplex& a, const Rational& s) { return {a.re + s, a.im}; }
  friend BigComplex operator+(const Rational& s, const BigComplex& a) { return {a.re + s, a.im}; }
  friend BigComplex operator-(const BigComplex& a, const Rational& s) { return {a.re - s, a.im}; }
  friend BigComplex operator+(const BigComplex& a, long s) { return {a.re + s, a.im}; }
  friend BigComplex operator-(const BigComplex& a, long s) { return {a.re - s, a.im}; }
  friend BigComplex operator+(const BigComplex& a, int s) { return {a.re + s, a.im}; }
  friend BigComplex operator-(const BigComplex& a, int s) { return {a.re - s, a.im}; }
  friend BigComplex operator/(const BigComplex& a, long s) { return {a.re / s, a.im / s}; }
  friend BigComplex operator/(const BigComplex& a, int s) { return {a.re / s, a.im / s}; }
  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
    return os << "(" << z.re << ", " << z.im << ")";
  }
};

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigFloat norm2(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) { return sqrt(norm2(z)); }
// Principal argument in (-pi, pi].
inline BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

inline BigComplex sqrt(const BigComplex& z) {
  BigFloat r = abs(z);
  BigFloat a = sqrt((r + z.re) / 2);
  BigFloat b = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

inline BigComplex pow(BigComplex base, long e) {
  int bits = base.precision();
  if (e < 0) {
    base = BigComplex::one(bits) / base;
    e = -e;
  }
  BigComplex out = BigComplex::one(bits);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace g25
