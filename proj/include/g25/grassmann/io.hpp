#pragma once

#include "g25/grassmann/certificate.hpp"

#include <json.hpp>

namespace g25 {

namespace detail {

inline nlohmann::json poly_json(const UniPoly<BigComplex>& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back({p[k].re.to_double(), p[k].im.to_double()});
  return a;
}

template <class T>
nlohmann::json poly_json_exact(const UniPoly<T>& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(p[k].str());
  return a;
}

inline UniPoly<BigComplex> poly_from_json(const nlohmann::json& a, int bits) {
  if (!a.is_array()) throw argument_error("polynomial must be a JSON array of [re, im] pairs");
  std::vector<BigComplex> c;
  for (const auto& z : a) {
    if (z.is_number()) {
      c.emplace_back(z.get<double>(), 0.0, bits);
    } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
      c.emplace_back(z[0].get<double>(), z[1].get<double>(), bits);
    } else {
      throw argument_error("coefficient must be a number or an [re, im] pair");
    }
  }
  return UniPoly<BigComplex>(c);
}

}  // namespace detail

// {"rows": [[p_00, ..., p_04], [p_10, ..., p_14]]}, each p an ascending
// coefficient list of [re, im] pairs.
inline nlohmann::json to_json(const PencilCurve<BigComplex>& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 5; ++j) row.push_back(detail::poly_json(c.rows[r][j]));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

template <class T>
nlohmann::json to_json_exact(const PencilCurve<T>& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 5; ++j) row.push_back(detail::poly_json_exact(c.rows[r][j]));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

inline nlohmann::json to_json(const PlueckerCurve<BigComplex>& F) {
  nlohmann::json coords = nlohmann::json::object();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      coords["p" + std::to_string(i) + std::to_string(j)] = detail::poly_json(F.at(i, j));
  return {{"degree", F.degree()}, {"coordinates", coords}};
}

inline PencilCurve<BigComplex> pencil_from_json(const nlohmann::json& j, int bits = kFloatBits) {
  const auto& rows = j.contains("pencil") ? j.at("pencil").at("rows") : j.at("rows");
  if (!rows.is_array() || rows.size() != 2) throw argument_error("pencil needs two rows");
  PencilCurve<BigComplex> c;
  for (int r = 0; r < 2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 5) throw argument_error("each pencil row needs five entries");
    for (int k = 0; k < 5; ++k) c.rows[r][k] = detail::poly_from_json(rows[r][k], bits);
  }
  return c;
}

}  // namespace g25
