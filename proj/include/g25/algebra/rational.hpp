#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g25 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct contract_violation : std::logic_error {
  using std::logic_error::logic_error;
};
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw argument_error("zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "p", "p/q", decimals such as "-0.1475" and scientific "1e-20".
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  if (s.empty()) throw argument_error("empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational n = parse_rational(s.substr(0, slash));
    Rational d = parse_rational(s.substr(slash + 1));
    if (d == 0) throw argument_error("zero denominator in '" + s + "'");
    return n / d;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long long scale = 0;
  bool seen_point = false, any_digit = false;
  for (; pos < s.size(); ++pos) {
    char ch = s[pos];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw argument_error("not a number: '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw argument_error("not a number: '" + s + "'");
    std::string ex = s.substr(pos + 1);
    if (ex.empty()) throw argument_error("bad exponent in '" + s + "'");
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(ex, &used);
    } catch (...) {
      throw argument_error("bad exponent in '" + s + "'");
    }
    if (used != ex.size() || e > 100000 || e < -100000) throw argument_error("bad exponent in '" + s + "'");
    scale += e;
  }
  // cpp_int reads a leading zero as an octal prefix.
  const auto nz = digits.find_first_not_of('0');
  Integer mant(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  Rational r = scale >= 0 ? Rational(mant * ten_pow) : Rational(mant, ten_pow);
  return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rational rpow(Rational base, long long e) {
  if (e < 0) {
    if (base == 0) throw argument_error("zero to a negative power");
    base = Rational(1) / base;
    e = -e;
  }
  Rational out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

inline bool integer_sqrt_exact(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// Square root of a non-negative rational when it is itself rational.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  Integer a, b;
  if (!integer_sqrt_exact(rat_num(r), a) || !integer_sqrt_exact(rat_den(r), b)) return false;
  out = Rational(a, b);
  return true;
}

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return Rational(acc);
}

inline Integer factorial(int n) {
  Integer acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace g25
