#pragma once

#include "g25/algebra/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace g25 {

namespace detail {

// Divide by the positive rational content; never flips signs.
inline UniPoly<Rational> positive_content_free(const UniPoly<Rational>& p) {
  if (p.is_zero()) return p;
  auto q = primitive_part(p);
  if ((q.lead() < 0) != (p.lead() < 0)) q = -q;
  return q;
}

inline int sign_at(const UniPoly<Rational>& p, const Rational& x) { return sign(p(x)); }

// Sign of p at +inf (dir = 1) or -inf (dir = -1).
inline int sign_at_infinity(const UniPoly<Rational>& p, int dir) {
  if (p.is_zero()) return 0;
  int s = sign(p.lead());
  return (dir < 0 && p.degree() % 2 == 1) ? -s : s;
}

}  // namespace detail

class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw argument_error("Sturm sequence of the zero polynomial");
    seq_.push_back(detail::positive_content_free(p));
    if (p.degree() < 1) return;
    seq_.push_back(detail::positive_content_free(p.derivative()));
    while (seq_.back().degree() > 0) {
      auto r = seq_[seq_.size() - 2] % seq_.back();
      if (r.is_zero()) break;
      seq_.push_back(detail::positive_content_free(-r));
    }
  }

  // Sign variations at x; std::nullopt with dir selects -inf / +inf.
  int variations(const std::optional<Rational>& x, int dir = 0) const {
    int count = 0, last = 0;
    for (const auto& q : seq_) {
      int s = x ? detail::sign_at(q, *x) : detail::sign_at_infinity(q, dir);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  const std::vector<UniPoly<Rational>>& polys() const { return seq_; }

 private:
  std::vector<UniPoly<Rational>> seq_;
};

namespace detail {

// Remove every exact factor (x - r) from p.
inline UniPoly<Rational> deflate_root(UniPoly<Rational> p, const Rational& r) {
  const UniPoly<Rational> lin{Rational(-r), Rational(1)};
  while (!p.is_zero() && p(r) == 0) p = p / lin;
  return p;
}

// Distinct roots in (a, b) of a square-free polynomial nonzero at finite ends.
inline int count_open(const SturmSequence& s, const std::optional<Rational>& a, const std::optional<Rational>& b) {
  return s.variations(a, -1) - s.variations(b, 1);
}

}  // namespace detail

// Number of distinct real roots in the open interval (a, b).  Roots sitting
// exactly on an endpoint are divided out first, which leaves the count inside
// the open interval unchanged.
inline int sturm_count(const UniPoly<Rational>& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw argument_error("sturm_count of the zero polynomial");
  if (!(a < b)) throw argument_error("sturm_count needs a < b");
  auto q = squarefree_part(p);
  q = detail::deflate_root(detail::deflate_root(q, a), b);
  if (q.degree() < 1) return 0;
  return detail::count_open(SturmSequence(q), a, b);
}

// Number of distinct real roots on the whole line.
inline int sturm_count_all(const UniPoly<Rational>& p) {
  if (p.is_zero()) throw argument_error("sturm_count of the zero polynomial");
  auto q = squarefree_part(p);
  if (q.degree() < 1) return 0;
  return detail::count_open(SturmSequence(q), std::nullopt, std::nullopt);
}

// All roots have modulus below this bound.
inline Rational cauchy_bound(const UniPoly<Rational>& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, rabs(p[k] / p.lead()));
  return m + 1;
}

struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

namespace detail {

class Isolator {
 public:
  Isolator(const Rational& width, std::vector<RootInterval>& out) : width_(width), out_(out) {}

  // q square-free and nonzero at lo and hi.
  void run(const UniPoly<Rational>& q, const Rational& lo, const Rational& hi) {
    if (q.degree() < 1 || !(lo < hi)) return;
    SturmSequence s(q);
    int c = count_open(s, lo, hi);
    if (c == 0) return;
    if (c == 1) {
      refine(q, lo, hi);
      return;
    }
    Rational m = (lo + hi) / 2;
    if (q(m) == 0) {
      out_.push_back({m, m});
      auto d = deflate_root(q, m);
      run(d, lo, m);
      run(d, m, hi);
    } else {
      run(q, lo, m);
      run(q, m, hi);
    }
  }

 private:
  void refine(const UniPoly<Rational>& q, Rational lo, Rational hi) {
    int slo = sign_at(q, lo);
    while (hi - lo > width_) {
      Rational m = (lo + hi) / 2;
      int sm = sign_at(q, m);
      if (sm == 0) {
        out_.push_back({m, m});
        return;
      }
      if (sm == slo)
        lo = m;
      else
        hi = m;
    }
    out_.push_back({lo, hi});
  }

  Rational width_;
  std::vector<RootInterval>& out_;
};

}  // namespace detail

// Disjoint intervals, each holding exactly one real root of p in [a, b] and
// of width at most `width`; rational roots met during bisection come back as
// degenerate intervals [r, r].  Sorted by left endpoint.
inline std::vector<RootInterval> isolate_roots(const UniPoly<Rational>& p, const Rational& a, const Rational& b,
                                               const Rational& width) {
  if (p.is_zero()) throw argument_error("isolate_roots of the zero polynomial");
  if (width <= 0) throw argument_error("isolation width must be positive");
  if (b < a) throw argument_error("empty isolation interval");
  std::vector<RootInterval> out;
  auto q = squarefree_part(p);
  for (const Rational& e : {a, b}) {
    if (q.degree() >= 1 && q(e) == 0) {
      out.push_back({e, e});
      q = detail::deflate_root(q, e);
    }
    if (a == b) break;
  }
  detail::Isolator(width, out).run(q, a, b);
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

inline std::vector<RootInterval> isolate_roots(const UniPoly<Rational>& p, const Rational& width) {
  if (p.is_zero()) throw argument_error("isolate_roots of the zero polynomial");
  Rational r = cauchy_bound(p);
  return isolate_roots(p, -r, r, width);
}

// Shrink an isolating interval until its width is at most `width`.
inline RootInterval refine_root(const UniPoly<Rational>& p, RootInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  auto q = squarefree_part(p);
  int slo = detail::sign_at(q, iv.lo);
  while (iv.width() > width) {
    Rational m = iv.mid();
    int sm = detail::sign_at(q, m);
    if (sm == 0) return {m, m};
    if (sm == slo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

}  // namespace g25
