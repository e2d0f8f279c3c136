#pragma once

#include "g25/algebra/bigfloat.hpp"
#include "g25/algebra/rational.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace g25 {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  double tolerance = 0;
  bool pass = false;
};

using Checks = std::vector<Check>;

// Twelve significant digits.
inline std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
inline std::string fmt(const BigFloat& x) { return x.str(12); }
inline std::string fmt(const Rational& x) { return x.str(); }

inline Check exact_check(std::string name, const std::string& expected, const std::string& computed) {
  return {std::move(name), expected, computed, 0, expected == computed};
}
inline Check exact_check(std::string name, const Rational& expected, const Rational& computed) {
  return {std::move(name), fmt(expected), fmt(computed), 0, expected == computed};
}
inline Check bool_check(std::string name, bool ok, const std::string& detail = "") {
  return {std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : "false: " + detail), 0, ok};
}

// |computed - expected| <= tol (absolute).
inline Check close_check(std::string name, const BigFloat& expected, const BigFloat& computed, double tol) {
  const bool ok = abs(computed - expected) <= BigFloat(tol, computed.precision());
  return {std::move(name), fmt(expected), fmt(computed), tol, ok};
}
inline Check close_check(std::string name, double expected, double computed, double tol) {
  return {std::move(name), fmt(expected), fmt(computed), tol, std::abs(computed - expected) <= tol};
}
// computed <= bound.
inline Check bound_check(std::string name, double bound, double computed) {
  return {std::move(name), "<= " + fmt(bound), fmt(computed), bound, computed <= bound};
}

inline nlohmann::json to_json(const Check& c) {
  return {{"check_name", c.name},
          {"expected", c.expected},
          {"computed", c.computed},
          {"tolerance", c.tolerance},
          {"pass", c.pass}};
}

inline bool all_pass(const Checks& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

}  // namespace g25
