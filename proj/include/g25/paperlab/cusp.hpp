#pragma once

#include "g25/algebra/sturm.hpp"
#include "g25/moduli/solve.hpp"
#include "g25/paperlab/report.hpp"

namespace g25 {

// Exact data of the cusp computation; p in g, q in t_0, r in t_1, the two
// linear relations E, G and the closed forms t_0 = R/S, t_1 = T/U in g.
struct CuspData {
  MultiPoly p, q, r, E, G, R, S, T, U;
};

inline const CuspData& cusp_data() {
  static const CuspData d = [] {
    const std::vector<std::string> v{"g", "t_0", "t_1"};
    auto P = [&](const char* s) { return MultiPoly::parse(s, v); };
    return CuspData{
        P("3004245721g^6 - 139634316726g^5 - 67838574585g^4 - 318786958820g^3 - 67838574585g^2 - 139634316726g + "
          "3004245721"),
        P("2537649t_0^6 - 40347234t_0^5 + 36454860t_0^4 - 19711080t_0^3 + 26076060t_0^2 - 17915544t_0 + 3452164"),
        P("6861904453295341780216896t_1^6 - 57789440847499427495680896t_1^5 - 3541432129528999644182160t_1^4 + "
          "2695787548715827169923680t_1^3 - 242591843875043061525060t_1^2 - 261056339362401426814176t_1 + "
          "53689575410338079139841"),
        P("30407219135534569920865279281g^2t_1 - 5684396631350441922486404084g^2 + "
          "4826381508202691775218328738gt_1 + 8781109390742136392820835978g + "
          "22087970177286319548246901485t_0 - 37952752504503427337193407559t_1 - "
          "10129670167010754418270796864"),
        P("323983664320381367395969030814241g^3 - 15097919249633508113716536736052777g^2 + "
          "24001947052912436490532391777190000gt_1 - 10297270579570244241163795555112489g - "
          "21160216103727154670480065729425120t_0 + 38155570002907589892718590589124280t_1 - "
          "10753529104240427995602453394128335"),
        P("323983664320381367395969030814241g^5 - 15046494988853004912329176221825959g^4 - "
          "8611085577295995251867740593198034g^3+ 6658017307603866925677723269688366g^2 + "
          "8122830950478969874129540484608001g + 26132918116090821757236925434099385"),
        P("21160216103727154670480065729425120g^2 + 20793797801629220801560324794395760g + "
          "1305303435283084266467628002760120"),
        P("-423618308217230277983078980100353g^3 + 26861312395386909671099284789417865g^2 + "
          "2464682459146076205358051730246729g + 26749087059945119323559494796984559"),
        P("38088388986708878406864118312965216g^2 + 37428836042932597442808584629912368g + "
          "2349546183509551679641730404968216"),
    };
  }();
  return d;
}

struct CuspPoint {
  RootInterval g_interval;
  BigFloat g, t0, t1, t6;
};

namespace detail {

inline BigFloat newton_polish(const UniPoly<Rational>& p, const RootInterval& iv, int bits) {
  const auto fp = p.map([&](const Rational& x) { return BigFloat(x, bits); });
  const auto dp = fp.derivative();
  BigFloat x(iv.mid(), bits);
  for (int i = 0; i < 100; ++i) {
    const BigFloat step = fp.eval(x) / dp.eval(x);
    x = x - step;
    if (abs(step) <= ldexp(abs(x), -(bits - 4))) break;
  }
  return x;
}

inline BigFloat eval_in(const MultiPoly& m, const BigFloat& g, const BigFloat& t0, const BigFloat& t1) {
  return m.eval_as<BigFloat>({g, t0, t1});
}

inline BigFloat rel_eval(const MultiPoly& m, const BigFloat& g, const BigFloat& t0, const BigFloat& t1) {
  return abs(eval_in(m, g, t0, t1)) / m.abs_scale<BigFloat>({g, t0, t1});
}

}  // namespace detail

// The positive roots of p, each with t_0 = R/S, t_1 = T/U and t_6 = t_1^3/(t_0^2 g).
inline std::vector<CuspPoint> cusp_points(int bits = kFloatBits, const Rational& width = make_rational(1, 1000000000000)) {
  const auto& d = cusp_data();
  const auto pg = d.p.to_univariate("g");
  std::vector<CuspPoint> out;
  for (const auto& iv : isolate_roots(pg, Rational(0), cauchy_bound(pg), width)) {
    if (iv.hi <= 0) continue;
    CuspPoint c;
    c.g_interval = iv;
    c.g = detail::newton_polish(pg, iv, bits);
    const BigFloat zero(0L, bits);
    c.t0 = detail::eval_in(d.R, c.g, zero, zero) / detail::eval_in(d.S, c.g, zero, zero);
    c.t1 = detail::eval_in(d.T, c.g, zero, zero) / detail::eval_in(d.U, c.g, zero, zero);
    c.t6 = pow(c.t1, 3) / (c.t0 * c.t0 * c.g);
    out.push_back(c);
  }
  return out;
}

inline Checks cusp_verify(int bits = kFloatBits) {
  Checks out;
  const auto& d = cusp_data();
  const auto pts = cusp_points(bits);
  out.push_back(exact_check("cusp.p_positive_roots", "2", std::to_string(pts.size())));
  if (pts.size() != 2) return out;
  const Rational width = make_rational(1, 1000000000000);
  out.push_back(bool_check("cusp.isolation_width", pts[0].g_interval.width() <= width && pts[1].g_interval.width() <= width));
  out.push_back(close_check("cusp.reciprocal_roots", BigFloat(1L, bits), pts[0].g * pts[1].g, 1e-20));

  // Printed values, ten decimals.
  const std::array<std::array<const char*, 3>, 2> printed{{{"14.9716642533", "8.4772577609", "0.0212731522"},
                                                            {"0.3184944933", "0.1803379951", "47.0076078738"}}};
  const double digit = 1e-10;
  for (int k = 0; k < 2; ++k) {
    const auto& c = pts[k];
    const std::string tag = "cusp.g" + std::to_string(k) + ".";
    const BigFloat vals[3] = {c.t0, c.t1, c.g};
    const char* names[3] = {"t0", "t1", "g"};
    for (int i = 0; i < 3; ++i) {
      const BigFloat pr(parse_rational(printed[k][i]), bits);
      out.push_back({tag + names[i], printed[k][i], vals[i].str(16), digit,
                     abs(vals[i] - pr) < BigFloat(digit, bits)});
    }
    const ModuliPoint mp = derive_data(c.t0, c.t1, c.t6);
    out.push_back(bound_check(tag + "F_relative", 1e-30, (abs(mp.F) / mp.F_scale).to_double()));
    out.push_back(close_check(tag + "X", 2.0, mp.X.to_double(), 1e-8));
    out.push_back(close_check(tag + "Y", 2.0, mp.Y.to_double(), 1e-8));
    out.push_back(close_check(tag + "Z", 2.0, mp.Z.to_double(), 1e-8));
    const BigFloat zero(0L, bits);
    out.push_back(bound_check(tag + "q(t0)_relative", 1e-30, detail::rel_eval(d.q, zero, c.t0, zero).to_double()));
    out.push_back(bound_check(tag + "r(t1)_relative", 1e-30, detail::rel_eval(d.r, zero, zero, c.t1).to_double()));
    out.push_back(bound_check(tag + "E_relative", 1e-30, detail::rel_eval(d.E, c.g, c.t0, c.t1).to_double()));
    out.push_back(bound_check(tag + "G_relative", 1e-30, detail::rel_eval(d.G, c.g, c.t0, c.t1).to_double()));
    out.push_back(bool_check(tag + "in_S", feasibility(mp).in_S));
    out.push_back(exact_check(tag + "count_solutions", "1", std::to_string(count_solutions(mp))));
  }
  const auto s = sigma(pts[0].t0, pts[0].t1, pts[0].t6);
  out.push_back(close_check("cusp.sigma_pair.t0", pts[1].t0, s[0], 1e-9));
  out.push_back(close_check("cusp.sigma_pair.t1", pts[1].t1, s[1], 1e-9));
  out.push_back(close_check("cusp.sigma_pair.t6", pts[1].t6, s[2], 1e-9));
  return out;
}

}  // namespace g25
