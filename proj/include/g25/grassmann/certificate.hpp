#pragma once

#include "g25/grassmann/functional.hpp"

#include <json.hpp>

#include <optional>

namespace g25 {

struct Certificate {
  double plucker_residual_max = 0;
  Matrix<BigComplex> gram;
  double gram_defect = 0;
  bool in_grassmannian = false;
  bool constant_curvature = false;
  bool reducible = false;
  std::vector<RamifiedPoint> ramified;
  std::optional<double> w_closed;
  std::optional<double> w_numeric;
  double tolerance = kFloatTolerance;
  int precision_bits = kFloatBits;
  bool exact = false;
};

// Runs every check that applies; w_closed is supplied by the caller when the
// curve comes from known moduli.
template <class T>
Certificate certify(const PlueckerCurve<T>& F, std::optional<double> w_closed = std::nullopt,
                    bool with_quadrature = true, double tol = kFloatTolerance) {
  Certificate c;
  c.exact = scalar_traits<T>::exact;
  c.tolerance = tol;
  c.plucker_residual_max = pluecker_residual_max(F).to_double();
  c.in_grassmannian = in_grassmannian(F, tol);
  if (F.degree() == 6) {
    auto g = gram_and_defect(F, tol);
    c.gram = g.gram.map([](const T& x) { return to_complex(x, kFloatBits); });
    c.gram_defect = g.defect.to_double();
    c.constant_curvature = g.constant_curvature;
  }
  if (c.in_grassmannian) {
    auto r = ramification(F, kFloatBits, tol);
    c.reducible = r.reducible;
    c.ramified = r.divisor;
  }
  c.w_closed = w_closed;
  if (c.constant_curvature && c.in_grassmannian && with_quadrature) c.w_numeric = w_numeric(F);
  return c;
}

inline nlohmann::json to_json(const Certificate& c) {
  using nlohmann::json;
  json gram = json::array();
  for (int i = 0; i < c.gram.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < c.gram.cols(); ++j) row.push_back({c.gram(i, j).re.to_double(), c.gram(i, j).im.to_double()});
    gram.push_back(row);
  }
  json ram = json::array();
  for (const auto& p : c.ramified) {
    json pt = p.at_infinity ? json("inf") : json::array({p.z.re.to_double(), p.z.im.to_double()});
    ram.push_back({{"point", pt}, {"multiplicity", p.multiplicity}});
  }
  return {{"plucker_residual_max", c.plucker_residual_max},
          {"gram", gram},
          {"gram_defect", c.gram_defect},
          {"in_grassmannian", c.in_grassmannian},
          {"constant_curvature", c.constant_curvature},
          {"reducible", c.reducible},
          {"ramified", ram},
          {"w_closed", c.w_closed ? json(*c.w_closed) : json(nullptr)},
          {"w_numeric", c.w_numeric ? json(*c.w_numeric) : json(nullptr)},
          {"tolerance", c.tolerance},
          {"precision_bits", c.precision_bits},
          {"exact", c.exact}};
}

}  // namespace g25
