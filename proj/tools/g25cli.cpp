#include "g25/grassmann/io.hpp"
#include "g25/paperlab/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace g25;

namespace {

enum Exit { kOk = 0, kParse = 1, kInfeasible = 2, kVerify = 3 };

struct Options {
  std::string t, family33, g, t0_range, out, scan_format, levelset_format, in, s, only;
  int precision = kFloatBits;
  double tol = kFloatTolerance;
  int branch = 0;
  bool quadrature = false;
};

std::vector<Rational> parse_list(const std::string& text, std::size_t n, const char* flag) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != n) throw argument_error(std::string(flag) + " expects " + std::to_string(n) + " comma-separated values");
  return v;
}

struct Range {
  Rational lo, hi;
  int n;
};

Range parse_range(const std::string& text) {
  const auto a = text.find(':'), b = text.rfind(':');
  if (a == std::string::npos || a == b) throw argument_error("--t0-range expects lo:hi:n");
  Range r{parse_rational(text.substr(0, a)), parse_rational(text.substr(a + 1, b - a - 1)), 0};
  try {
    r.n = std::stoi(text.substr(b + 1));
  } catch (...) {
    throw argument_error("--t0-range: bad sample count");
  }
  if (r.n < 1 || r.hi < r.lo) throw argument_error("--t0-range needs lo <= hi and n >= 1");
  return r;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw argument_error("cannot open " + o.out);
  f << text;
}

json moduli_json(const ModuliPoint& mp) {
  json t = json::array();
  for (int i = 0; i < 7; ++i) t.push_back(mp.exact ? json(mp.exact->t[i].str()) : json(mp.t(i).to_double()));
  json j{{"t", t},
         {"g", mp.exact ? json(mp.exact->g.str()) : json(mp.num.g.to_double())},
         {"X", mp.X.to_double()},
         {"Y", mp.Y.to_double()},
         {"Z", mp.Z.to_double()},
         {"Q", mp.Q.to_double()},
         {"F_relative", (abs(mp.F) / mp.F_scale).to_double()}};
  if (const auto xyz = exact_xyz(mp)) j["XYZ_exact"] = {(*xyz)[0].str(), (*xyz)[1].str(), (*xyz)[2].str()};
  return j;
}

json infeasible_json(const ModuliPoint& mp, const std::string& why) {
  const auto f = feasibility(mp);
  return {{"error", "infeasible"},
          {"reason", why},
          {"moduli", moduli_json(mp)},
          {"F_zero", f.F_zero},
          {"slacks", {f.slacks[0].to_double(), f.slacks[1].to_double(), f.slacks[2].to_double()}}};
}

bool certified(const Certificate& c) { return c.in_grassmannian && c.constant_curvature; }

int run_construct(const Options& o) {
  if (o.t.empty() == o.family33.empty()) throw argument_error("construct needs exactly one of --t or --family33");
  json j;
  Certificate cert;
  if (!o.family33.empty()) {
    const BigFloat theta(o.family33, o.precision);
    const auto f = family33(theta);
    const auto F = wedge_pencil(f.pencil);
    cert = certify(F, std::nullopt, o.quadrature, o.tol);
    j = {{"family33", {{"theta", theta.to_double()}, {"t0", f.t0.to_double()}, {"t1", f.t1.to_double()}, {"g", f.g.to_double()}}},
         {"pencil", to_json(f.pencil)},
         {"pluecker", to_json(F)},
         {"certificate", to_json(cert)}};
  } else {
    const auto t = parse_list(o.t, 3, "--t");
    const auto mp = derive_data(t[0], t[1], t[2], o.precision);
    try {
      const auto cc = construct_curve(mp, o.branch, o.quadrature);
      cert = cc.certificate;
      json angles = json::array();
      for (const auto& th : cc.solution.theta) angles.push_back(th.to_double());
      j = {{"moduli", moduli_json(mp)},
           {"count", count_solutions(mp)},
           {"branch", o.branch},
           {"angles", angles},
           {"pencil", to_json(cc.pencil)},
           {"exact_pencil", cc.exact_pencil ? to_json_exact(*cc.exact_pencil) : json(nullptr)},
           {"pluecker", to_json(cc.curve)},
           {"certificate", to_json(cert)}};
    } catch (const feasibility_error& e) {
      std::cerr << "infeasible: " << e.what() << '\n';
      emit(o, infeasible_json(mp, e.what()).dump(2) + "\n");
      return kInfeasible;
    } catch (const inconsistency_error& e) {
      std::cerr << "verification failed: " << e.what() << '\n';
      return kVerify;
    }
  }
  j["precision_bits"] = o.precision;
  emit(o, j.dump(2) + "\n");
  return certified(cert) ? kOk : kVerify;
}

int run_certify(const Options& o) {
  std::ifstream f(o.in);
  if (!f) throw argument_error("cannot open " + o.in);
  json in;
  try {
    in = json::parse(f);
  } catch (const json::exception& e) {
    throw argument_error(std::string("bad JSON: ") + e.what());
  }
  const auto F = wedge_pencil(pencil_from_json(in, o.precision));
  const auto cert = certify(F, std::nullopt, o.quadrature, o.tol);
  emit(o, json{{"pluecker", to_json(F)}, {"certificate", to_json(cert)}}.dump(2) + "\n");
  return certified(cert) ? kOk : kVerify;
}

int run_scan(const Options& o) {
  if (o.g.empty() || o.t0_range.empty()) throw argument_error("scan needs --g and --t0-range");
  const Rational g = parse_rational(o.g);
  const auto r = parse_range(o.t0_range);
  const auto samples = scan(g, r.lo, r.hi, std::max(r.n, 2), o.precision);
  std::ostringstream os;
  if (o.scan_format == "csv") {
    write_csv(os, samples);
  } else if (o.scan_format == "dat") {
    write_dat(os, samples);
  } else {
    json a = json::array();
    for (const auto& s : samples)
      a.push_back({{"t0", s.t0.str()},
                   {"t1", s.t1_exact ? json(s.t1_exact->str()) : json(s.t1.to_double())},
                   {"g", g.str()},
                   {"F", s.F},
                   {"X", s.X},
                   {"Y", s.Y},
                   {"Z", s.Z},
                   {"in_S", s.in_S},
                   {"count", s.count},
                   {"W_over_pi", s.W_over_pi}});
    os << a.dump(2) << '\n';
  }
  emit(o, os.str());
  return kOk;
}

int run_levelset(const Options& o) {
  std::vector<Rational> ss;
  if (!o.s.empty()) {
    ss.push_back(parse_rational(o.s));
  } else {
    const auto r = parse_range(o.t0_range.empty() ? "1:11/6:12" : o.t0_range);
    for (int k = 0; k < r.n; ++k) ss.push_back(r.n == 1 ? r.lo : r.lo + (r.hi - r.lo) * Rational(k) / Rational(r.n - 1));
  }
  std::ostringstream os;
  json a = json::array();
  if (o.levelset_format == "csv") os << "s,F1,F2,residual1,residual2\n" << std::setprecision(17);
  for (const auto& s : ss) {
    const auto b = level_set_s1(s, o.precision);
    if (o.levelset_format == "csv") {
      os << s.convert_to<double>() << ',' << b.F1.to_double() << ',' << b.F2.to_double() << ',' << b.residual1.to_double()
         << ',' << b.residual2.to_double() << '\n';
    } else {
      a.push_back({{"s", s.str()},
                   {"F1", b.F1_exact ? json(b.F1_exact->str()) : json(b.F1.to_double())},
                   {"F2", b.F2_exact ? json(b.F2_exact->str()) : json(b.F2.to_double())},
                   {"residual1", b.residual1.to_double()},
                   {"residual2", b.residual2.to_double()}});
    }
  }
  if (o.levelset_format != "csv") os << a.dump(2) << '\n';
  emit(o, os.str());
  return kOk;
}

int run_functional(const Options& o) {
  if (o.t.empty()) throw argument_error("functional needs --t");
  const auto t = parse_list(o.t, 3, "--t");
  const auto mp = derive_data(t[0], t[1], t[2], o.precision);
  const Rational g = g_of(t[0], t[1], t[2]);
  const Rational w = w_closed_over_pi(t[0], t[1], g);
  json j{{"t", {t[0].str(), t[1].str(), t[2].str()}},
         {"g", g.str()},
         {"W_over_pi", w.str()},
         {"W", w.convert_to<double>() * M_PI}};
  if (o.quadrature) {
    try {
      const auto cc = construct_curve(mp, o.branch, true);
      j["W_numeric"] = cc.certificate.w_numeric ? json(*cc.certificate.w_numeric) : json(nullptr);
      j["W_moment"] = w_moment(cc.curve, o.precision).to_double();
    } catch (const feasibility_error& e) {
      std::cerr << "infeasible: " << e.what() << '\n';
      emit(o, infeasible_json(mp, e.what()).dump(2) + "\n");
      return kInfeasible;
    }
  }
  emit(o, j.dump(2) + "\n");
  return kOk;
}

int run_verify(const Options& o) {
  std::set<std::string> only;
  {
    std::stringstream ss(o.only);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) only.insert(item);
  }
  for (const auto& name : only) {
    bool known = name == "digests";
    for (const auto& g : suite_groups()) known = known || g.name == name;
    if (!known) throw argument_error("unknown check group '" + name + "'");
  }
  json report = json::array();
  std::vector<std::string> failed;
  auto add = [&](const Checks& cs) {
    for (const auto& c : cs) {
      report.push_back(to_json(c));
      if (!c.pass) failed.push_back(c.name);
    }
  };
  if (only.empty() || only.count("digests")) add(suite_digests());
  for (const auto& g : suite_groups())
    if (only.empty() || only.count(g.name)) add(run_group(g, o.precision));
  emit(o, report.dump(2) + "\n");
  for (const auto& n : failed) std::cerr << "FAIL " << n << '\n';
  return failed.empty() ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-curvature holomorphic 2-spheres in G(2,5): construction and verification"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(64, 4096))->capture_default_str();
    s->add_option("--tol", o.tol, "certification tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    s->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* construct = app.add_subcommand("construct", "construct and certify a curve from moduli or a family33 angle");
  construct->add_option("--t", o.t, "t0,t1,t6 (rationals or decimals)");
  construct->add_option("--family33", o.family33, "angle theta of the one-parameter family");
  construct->add_option("--branch", o.branch, "0 or 1 when two curves exist")->check(CLI::Range(0, 1))->capture_default_str();
  construct->add_flag("--quadrature", o.quadrature, "also integrate W numerically");
  common(construct);

  auto* cert = app.add_subcommand("certify", "certify a pencil read from JSON");
  cert->add_option("--in", o.in, "pencil JSON")->required();
  cert->add_flag("--quadrature", o.quadrature, "also integrate W numerically");
  common(cert);

  auto* sc = app.add_subcommand("scan", "sample a g-level set of the moduli space");
  sc->add_option("--g", o.g, "level g")->required();
  sc->add_option("--t0-range", o.t0_range, "lo:hi:n")->required();
  sc->add_option("--format", o.scan_format, "csv, dat or json")->check(CLI::IsMember({"csv", "dat", "json"}))->default_val("csv");
  common(sc);

  auto* ls = app.add_subcommand("levelset", "closed-form branches of the g = 1 level set");
  ls->add_option("--s", o.s, "single t0 in [1, 11/6]");
  ls->add_option("--t0-range", o.t0_range, "lo:hi:n (default 1:11/6:12)");
  ls->add_option("--format", o.levelset_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  common(ls);

  auto* fn = app.add_subcommand("functional", "closed-form W at a moduli point");
  fn->add_option("--t", o.t, "t0,t1,t6")->required();
  fn->add_option("--branch", o.branch, "branch used with --quadrature")->check(CLI::Range(0, 1));
  fn->add_flag("--quadrature", o.quadrature, "also construct the curve and integrate");
  common(fn);

  auto* vp = app.add_subcommand("verify-paper", "run the verification suite");
  vp->add_option("--only", o.only, "comma-separated check groups");
  common(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*construct) return run_construct(o);
    if (*cert) return run_certify(o);
    if (*sc) return run_scan(o);
    if (*ls) return run_levelset(o);
    if (*fn) return run_functional(o);
    if (*vp) return run_verify(o);
  } catch (const feasibility_error& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const argument_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerify;
  }
  return kParse;
}
