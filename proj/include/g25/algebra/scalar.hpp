#pragma once

#include "g25/algebra/bigcomplex.hpp"
#include "g25/algebra/quadext.hpp"
#include "g25/algebra/rational.hpp"

#include <type_traits>

namespace g25 {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool complex = false;
};
template <int... Ds>
struct scalar_traits<QuadExt<Ds...>> {
  static constexpr bool exact = true;
  static constexpr bool complex = QuadExt<Ds...>::has_i();
};
template <>
struct scalar_traits<BigFloat> {
  static constexpr bool exact = false;
  static constexpr bool complex = false;
};
template <>
struct scalar_traits<BigComplex> {
  static constexpr bool exact = false;
  static constexpr bool complex = true;
};

inline const Rational& conj(const Rational& x) { return x; }
inline const BigFloat& conj(const BigFloat& x) { return x; }

inline bool is_exact_zero(const Rational& x) { return x == 0; }
template <int... Ds>
bool is_exact_zero(const QuadExt<Ds...>& x) {
  return x.is_zero();
}
inline bool is_exact_zero(const BigFloat& x) { return x.is_zero(); }
inline bool is_exact_zero(const BigComplex& x) { return x.is_zero(); }

inline BigComplex to_complex(const Rational& x, int bits) { return BigComplex(x, bits); }
inline BigComplex to_complex(const BigFloat& x, int bits) { return BigComplex(x.with_precision(bits)); }
inline BigComplex to_complex(const BigComplex& x, int bits) { return x.with_precision(bits); }
template <int... Ds>
BigComplex to_complex(const QuadExt<Ds...>& x, int bits) {
  return x.to_complex(bits);
}

inline Rational one_like(const Rational&) { return Rational(1); }
template <int... Ds>
QuadExt<Ds...> one_like(const QuadExt<Ds...>&) {
  return QuadExt<Ds...>(1);
}
inline BigFloat one_like(const BigFloat& x) { return BigFloat(1L, x.precision()); }
inline BigComplex one_like(const BigComplex& x) { return BigComplex::one(x.precision()); }

// Embed a rational into the scalar kind of `like` (same precision).
inline Rational embed(const Rational& r, const Rational&) { return r; }
template <int... Ds>
QuadExt<Ds...> embed(const Rational& r, const QuadExt<Ds...>&) {
  return QuadExt<Ds...>(r);
}
inline BigFloat embed(const Rational& r, const BigFloat& like) { return BigFloat(r, like.precision()); }
inline BigComplex embed(const Rational& r, const BigComplex& like) { return BigComplex(r, like.precision()); }

// Positive square root of a non-negative rational in the scalar kind of
// `like`; exact kinds throw when the root is outside the field.
inline Rational sqrt_rat(const Rational& r, const Rational&) {
  Rational out;
  if (!rational_sqrt(r, out)) throw argument_error("square root of " + to_string(r) + " is irrational");
  return out;
}
template <int... Ds>
QuadExt<Ds...> sqrt_rat(const Rational& r, const QuadExt<Ds...>&) {
  return QuadExt<Ds...>::sqrt_or_throw(r);
}
inline BigFloat sqrt_rat(const Rational& r, const BigFloat& like) { return sqrt(BigFloat(r, like.precision())); }
inline BigComplex sqrt_rat(const Rational& r, const BigComplex& like) {
  return BigComplex(sqrt(BigFloat(r, like.precision())));
}

// |x|^2 as a float for reporting and tolerance checks.
template <class T>
BigFloat magnitude2(const T& x, int bits) {
  return norm2(to_complex(x, bits));
}

}  // namespace g25
