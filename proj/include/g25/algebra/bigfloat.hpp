#pragma once

// Thin value wrapper over mpfr_t.  Every value carries its own precision and
// binary operations run at the larger of the two operand precisions, so no
// process-wide precision setting is ever consulted.

#include "g25/algebra/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace g25 {

constexpr int kMinPrecision = 53;
constexpr int kDefaultPrecision = 256;

class BigFloat {
 public:
  BigFloat() : BigFloat(0L, kMinPrecision) {}
  BigFloat(int v, int bits) : BigFloat(static_cast<long>(v), bits) {}

  BigFloat(long v, int bits) {
    init(bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  BigFloat(double v, int bits) {
    init(bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
  }
  BigFloat(const Rational& r, int bits) {
    init(bits);
    mpfr_set_q(v_, r.backend().data(), MPFR_RNDN);
  }
  BigFloat(const std::string& decimal, int bits) {
    init(bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_set_q(v_, parse_rational(decimal).backend().data(), MPFR_RNDN);
    }
  }
  BigFloat(const BigFloat& o) {
    init(o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    init(kMinPrecision);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.precision());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  BigFloat with_precision(int bits) const {
    BigFloat out(0L, bits);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rational to_rational() const {
    if (!mpfr_number_p(v_)) throw numeric_error("non-finite value has no rational form");
    Rational q;
    mpfr_get_q(q.backend().data(), v_);
    return q;
  }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Fixed number of significant decimal digits, exponent form when needed.
  std::string str(int digits = 12) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
  }

  BigFloat operator-() const {
    BigFloat out(0L, precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
  }

#define G25_BF_BINOP(op, fn)                                              \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {     \
    BigFloat out(0L, std::max(a.precision(), b.precision()));            \
    fn(out.v_, a.v_, b.v_, MPFR_RNDN);                                    \
    return out;                                                           \
  }                                                                       \
  friend BigFloat operator op(const BigFloat& a, long b) { return a op BigFloat(b, a.precision()); } \
  friend BigFloat operator op(long a, const BigFloat& b) { return BigFloat(a, b.precision()) op b; } \
  friend BigFloat operator op(const BigFloat& a, int b) { return a op BigFloat(long(b), a.precision()); } \
  friend BigFloat operator op(int a, const BigFloat& b) { return BigFloat(long(a), b.precision()) op b; } \
  friend BigFloat operator op(const BigFloat& a, double b) { return a op BigFloat(b, a.precision()); } \
  friend BigFloat operator op(double a, const BigFloat& b) { return BigFloat(a, b.precision()) op b; } \
  friend BigFloat operator op(const BigFloat& a, const Rational& b) { return a op BigFloat(b, a.precision()); } \
  friend BigFloat operator op(const Rational& a, const BigFloat& b) { return BigFloat(a, b.precision()) op b; } \
  BigFloat& operator op##=(const BigFloat& b) { return *this = *this op b; } \
  BigFloat& operator op##=(long b) { return *this = *this op b; }     \
  BigFloat& operator op##=(int b) { return *this = *this op b; }      \
  BigFloat& operator op##=(const Rational& b) { return *this = *this op b; }

  G25_BF_BINOP(+, mpfr_add)
  G25_BF_BINOP(-, mpfr_sub)
  G25_BF_BINOP(*, mpfr_mul)
  G25_BF_BINOP(/, mpfr_div)
#undef G25_BF_BINOP

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(20); }

#define G25_BF_UNARY(name, fn)                 \
  friend BigFloat name(const BigFloat& x) {    \
    BigFloat out(0L, x.precision());           \
    fn(out.v_, x.v_, MPFR_RNDN);               \
    return out;                                \
  }
  G25_BF_UNARY(sqrt, mpfr_sqrt)
  G25_BF_UNARY(abs, mpfr_abs)
  G25_BF_UNARY(sin, mpfr_sin)
  G25_BF_UNARY(cos, mpfr_cos)
  G25_BF_UNARY(tan, mpfr_tan)
  G25_BF_UNARY(exp, mpfr_exp)
  G25_BF_UNARY(expm1, mpfr_expm1)
  G25_BF_UNARY(log, mpfr_log)
  G25_BF_UNARY(log10, mpfr_log10)
  G25_BF_UNARY(atan, mpfr_atan)
#undef G25_BF_UNARY

  friend BigFloat floor(const BigFloat& x) {
    BigFloat out(0L, x.precision());
    mpfr_floor(out.v_, x.v_);
    return out;
  }
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat out(0L, std::max(x.precision(), y.precision()));
    mpfr_atan2(out.v_, y.v_, x.v_, MPFR_RNDN);
    return out;
  }
  friend BigFloat pow(const BigFloat& x, long e) {
    BigFloat out(0L, x.precision());
    mpfr_pow_si(out.v_, x.v_, e, MPFR_RNDN);
    return out;
  }
  friend BigFloat ldexp(const BigFloat& x, long e) {
    BigFloat out(0L, x.precision());
    mpfr_mul_2si(out.v_, x.v_, e, MPFR_RNDN);
    return out;
  }

  static BigFloat pi(int bits) {
    BigFloat out(0L, bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }
  // 2^(-bits): the unit roundoff scale of a value at this precision.
  static BigFloat epsilon(int bits) { return ldexp(BigFloat(1L, bits), -bits); }

 private:
  void init(int bits) {
    if (bits < kMinPrecision) bits = kMinPrecision;
    mpfr_init2(v_, bits);
  }
  mpfr_t v_;
};

inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
inline BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

}  // namespace g25
