#pragma once

#include "g25/algebra/rational.hpp"
#include "g25/algebra/unipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace g25 {

// Sparse polynomial over Q in a fixed, named set of variables.  Exponent
// vectors are ordered lexicographically, so the last stored term leads.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(vars.size(), 0), c);
    return p;
  }
  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name) {
    MultiPoly p(vars);
    Exponent e(vars.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
  }
  static MultiPoly parse(const std::string& text, const std::vector<std::string>& vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw argument_error("unknown variable '" + name + "'");
  }
  bool has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != vars_.size()) throw argument_error("exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  int degree_in(const std::string& v) const { return degree_in(index_of(v)); }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  // Coefficient of var^k, as a polynomial in the same variable set.
  MultiPoly coefficient_in(int var, int k) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] != k) continue;
      Exponent f = e;
      f[var] = 0;
      out.add_term(f, c);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    if (a.vars_.empty()) return b;
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly out(a.vars_.empty() ? b.vars_ : a.vars_);
    Exponent e(out.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
    MultiPoly out(a.vars_);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
    return out;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int e) const {
    if (e < 0) throw argument_error("negative polynomial power");
    MultiPoly out = constant(vars_, Rational(1)), base = *this;
    while (e) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  MultiPoly derivative(int var) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      f[var] -= 1;
      out.add_term(f, c * e[var]);
    }
    return out;
  }
  MultiPoly derivative(const std::string& v) const { return derivative(index_of(v)); }

  Rational eval(const std::vector<Rational>& point) const { return eval_as<Rational>(point); }

  // Evaluation in any commutative ring containing Q.
  template <class U>
  U eval_as(const std::vector<U>& point) const {
    if (point.size() != vars_.size()) throw argument_error("point dimension does not match variable count");
    if (point.empty()) throw argument_error("evaluation needs at least one variable");
    const U zero = point[0] * 0;
    std::vector<std::vector<U>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      int d = std::max(0, degree_in(static_cast<int>(i)));
      powers[i].push_back(zero + 1);
      for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    U acc = zero;
    for (const auto& [e, c] : terms_) {
      U term = zero + c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) term = term * powers[i][e[i]];
      acc = acc + term;
    }
    return acc;
  }

  // Value and exact gradient at a rational point.
  std::pair<Rational, std::vector<Rational>> eval_and_gradient(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw argument_error("point dimension does not match variable count");
    std::vector<Rational> grad;
    for (std::size_t i = 0; i < vars_.size(); ++i) grad.push_back(derivative(static_cast<int>(i)).eval(point));
    return {eval(point), grad};
  }

  // Sum of absolute values of the evaluated terms: the natural scale for
  // judging a floating residual of this polynomial.
  template <class U>
  U abs_scale(const std::vector<U>& point) const {
    MultiPoly a(vars_);
    for (const auto& [e, c] : terms_) a.terms_.emplace(e, rabs(c));
    std::vector<U> ap;
    for (const auto& x : point) ap.push_back(abs(x));
    return a.eval_as<U>(ap);
  }

  // Replace variable var by the polynomial s (same variable set).
  MultiPoly substitute(int var, const MultiPoly& s) const {
    check_same(*this, s);
    int d = degree_in(var);
    if (d < 0) return *this;
    MultiPoly acc(vars_);
    for (int k = d; k >= 0; --k) acc = acc * s + coefficient_in(var, k);
    return acc;
  }
  MultiPoly substitute(const std::string& v, const MultiPoly& s) const { return substitute(index_of(v), s); }

  // Fix var at a rational value.
  MultiPoly specialize(int var, const Rational& value) const {
    return substitute(var, constant(vars_, value));
  }
  MultiPoly specialize(const std::string& v, const Rational& value) const { return specialize(index_of(v), value); }

  // Univariate view; every other variable must be absent.
  UniPoly<Rational> to_univariate(int var) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)));
    for (const auto& [e, coef] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != var && e[i] != 0)
          throw argument_error("polynomial is not univariate in " + vars_[var]);
      c[e[var]] += coef;
    }
    return UniPoly<Rational>(std::move(c));
  }
  UniPoly<Rational> to_univariate(const std::string& v) const { return to_univariate(index_of(v)); }

  static MultiPoly from_univariate(const UniPoly<Rational>& p, const std::vector<std::string>& vars,
                                   const std::string& v) {
    MultiPoly out(vars);
    int idx = out.index_of(v);
    for (int k = 0; k <= p.degree(); ++k) {
      Exponent e(vars.size(), 0);
      e[idx] = k;
      out.add_term(e, p.coeffs()[k]);
    }
    return out;
  }

  // Exact quotient; throws if the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& d) const {
    check_same(*this, d);
    if (d.is_zero()) throw argument_error("division by the zero polynomial");
    MultiPoly q(vars_), r = *this;
    const auto& [dlead_e, dlead_c] = *d.terms_.rbegin();
    while (!r.is_zero()) {
      const auto& [re, rc] = *r.terms_.rbegin();
      Exponent e(re.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = re[i] - dlead_e[i];
        if (e[i] < 0) throw numeric_error("inexact multivariate division");
      }
      Rational c = rc / dlead_c;
      q.add_term(e, c);
      MultiPoly t(vars_);
      t.add_term(e, c);
      r -= t * d;
    }
    return q;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coef = to_string(c);
      bool neg = c < 0;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      std::string mag = to_string(rabs(c));
      bool unit = mag == "1";
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += mag;
      else if (unit)
        out += mono;
      else
        out += mag + "*" + mono;
    }
    return out;
  }

  // 64-bit FNV-1a digest of the canonical printed form.
  std::uint64_t digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : str()) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  static void check_same(const MultiPoly& a, const MultiPoly& b) {
    if (!a.vars_.empty() && !b.vars_.empty() && a.vars_ != b.vars_)
      throw argument_error("polynomials over different variable sets");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw argument_error("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  MultiPoly expr() {
    skip();
    MultiPoly acc(vars_);
    bool first = true;
    for (;;) {
      int sgn = 1;
      bool had_sign = false;
      while (true) {
        if (eat('+')) {
          had_sign = true;
        } else if (eat('-')) {
          sgn = -sgn;
          had_sign = true;
        } else {
          break;
        }
      }
      if (!first && !had_sign) break;
      MultiPoly t = term();
      acc = sgn > 0 ? acc + t : acc - t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }
  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') break;
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        MultiPoly d = power();
        if (d.total_degree() > 0 || d.is_zero()) fail("division by a non-constant");
        acc = acc * (Rational(1) / d.terms().begin()->second);
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }
  MultiPoly power() {
    MultiPoly base = atom();
    skip();
    bool caret = false;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      caret = true;
    } else if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') {
      pos_ += 2;
      caret = true;
    }
    if (!caret) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return base.pow(std::stoi(s_.substr(start, pos_ - start)));
  }
  MultiPoly atom() {
    skip();
    if (eat('(')) {
      MultiPoly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      // Longest declared name at this position, so "gt_0" reads as g * t_0.
      const std::string* best = nullptr;
      for (const auto& v : vars_)
        if (s_.compare(pos_, v.size(), v) == 0 && (!best || v.size() > best->size())) best = &v;
      if (!best) fail("unknown variable");
      pos_ += best->size();
      return MultiPoly::variable(vars_, *best);
    }
    fail("expected a number, variable or '('");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(const std::string& text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).run();
}

// A quotient of two polynomials, kept unreduced; used to state identities
// that hold after clearing denominators.
struct RationalFunction {
  MultiPoly num, den;

  static RationalFunction of(const MultiPoly& p) { return {p, MultiPoly::constant(p.vars(), Rational(1))}; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num.is_zero()) throw argument_error("rational function division by zero");
    return {a.num * b.den, a.den * b.num};
  }
  friend RationalFunction operator*(const RationalFunction& a, const Rational& s) { return {a.num * s, a.den}; }

  // a == b as rational functions (cross multiplication).
  friend bool equivalent(const RationalFunction& a, const RationalFunction& b) {
    return (a.num * b.den - b.num * a.den).is_zero();
  }
};

}  // namespace g25
