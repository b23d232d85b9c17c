// Copyright 2026 The lipsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lipsat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

#include "lipsat/criteria.hpp"
#include "lipsat/errors.hpp"
#include "lipsat/expr.hpp"
#include "lipsat/polar.hpp"
#include "lipsat/puiseux.hpp"
#include "lipsat/saturation.hpp"

namespace lipsat::cli {

using json = nlohmann::ordered_json;

namespace {

// c * P with P integer primitive and its lowest term positive
std::pair<Rational, MPoly> split_content(const MPoly& p) {
  Integer l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_rational()) return {Rational(1), p};
    const Rational& r = c.rational();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  }
  for (const auto& [m, c] : p.terms()) {
    const Rational scaled = c.rational() * Rational(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  if (g == 0) return {Rational(0), MPoly()};
  Rational k(g, l);
  k.canonicalize();
  if (p.terms().begin()->second.rational() < 0) k = -k;
  return {k, p.scaled(Cyclotomic(Rational(1) / k))};
}

std::string grouped(const MPoly& p) {
  const std::string s = p.to_string();
  return p.terms().size() > 1 ? "(" + s + ")" : s;
}

std::string order_text(const OrderValue& o) { return o.to_string(); }

std::string t_power(const OrderValue& o, int scale) {
  if (o.is_infinite()) return "0";
  OrderValue s = o;
  s.value *= Rational(scale);
  const std::string e = rational_short(s.value);
  return std::string(o.is_exact() ? "" : "O") + "t^" + (s.value.get_den() == 1 ? e : "(" + e + ")");
}

json order_pair(const OrderValue& o, int scale) {
  return json{{"y", order_text(o)}, {"t", t_order_string(o, scale)}};
}

std::string series_text(const PuiseuxSeries& s, const std::string& var = "y") { return s.to_string(var); }

json branch_json(const BiPoly& p, const Branch& b) {
  json j;
  j["m"] = b.m;
  j["exact"] = b.exact;
  j["multiplicity"] = b.multiplicity;
  j["x"] = series_text(b.x);
  j["residual_order"] = order_text(verify_branch(p, b));
  json steps = json::array();
  for (const auto& s : b.provenance) steps.push_back({{"slope", rational_string(s.slope)}, {"root", expression_text(s.root)}});
  j["newton_steps"] = steps;
  return j;
}

json radicals_json() {
  json out = json::array();
  auto& table = SymbolTable::instance();
  for (const SymbolId id : table.radicals()) {
    const SymbolInfo& info = table.info(id);
    out.push_back({{"symbol", info.name}, {"degree", info.degree}, {"radicand", info.radicand.to_string()}});
  }
  return out;
}

json sheet_json(int branch, int sheet, int m) {
  return json{{"branch", branch}, {"conjugate", "zeta_" + std::to_string(m) + "^" + std::to_string(sheet)}};
}

json geometry_json(const PairGeometry& g, int scale) {
  return json{{"e1", order_pair(g.e1, scale)},
              {"e2", order_pair(g.e2, scale)},
              {"C", order_pair(g.contact, scale)},
              {"delta", order_pair(g.delta_ord, scale)}};
}

std::string statement(const Verdict& v, int scale) {
  const char* truth = v.outcome == Outcome::Pass ? "TRUE" : v.outcome == Outcome::Fail ? "FALSE" : "UNDECIDED";
  return t_power(v.lhs, scale) + " in (" + t_power(v.threshold, scale) + "): " + truth;
}

json verdict_json(const Verdict& v, int scale) {
  return json{{"outcome", to_string(v.outcome)},
              {"criterion", to_string(v.criterion)},
              {"stage", v.stage},
              {"lhs", order_pair(v.lhs, scale)},
              {"threshold", order_pair(v.threshold, scale)},
              {"statement", statement(v, scale)}};
}

json pair_json(const PairReport& r) {
  const int s = r.pair.polar ? r.pair.t_scale : 1;
  json j;
  j["sheets"] = json::array({sheet_json(r.pair.branch1, r.pair.sheet1, r.pair.m1),
                             sheet_json(r.pair.branch2, r.pair.sheet2, r.pair.m2)});
  j["curves"] = r.pair.describe();
  j["t_scale"] = s;
  j["precision"] = r.precision;
  json orders = geometry_json(r.geometry, s);
  orders["i1"] = order_pair(r.i1, s);
  orders["i2"] = order_pair(r.i2, s);
  orders["D"] = order_pair(r.det_order, s);
  j["orders"] = orders;
  j["verdict"] = verdict_json(r.verdict, s);
  json sc = json::array();
  for (const auto& x : r.shortcuts) {
    json e{{"criterion", to_string(x.criterion)}, {"applied", x.applied}};
    if (x.applied) {
      e["outcome"] = to_string(x.outcome);
      e["lhs"] = order_pair(x.lhs, s);
      e["threshold"] = order_pair(x.threshold, s);
    } else {
      e["reason"] = x.reason;
    }
    sc.push_back(e);
  }
  j["shortcuts"] = sc;
  json lead = json::array();
  for (const auto& l : r.leading)
    lead.push_back({{"name", l.name},
                    {"order", order_text(l.order)},
                    {"coefficient", l.coefficient ? json(expression_text(*l.coefficient)) : json(nullptr)}});
  j["leading_coefficients"] = lead;
  return j;
}

json direction_header(const PolarDirection& d) {
  return json{{"label", d.label}, {"a", expression_text(d.a)}, {"b", expression_text(d.b)}};
}

json saturation_json(const SaturationReport& rep) {
  json j;
  json dirs = json::array();
  for (const auto& d : rep.directions) {
    json dj = direction_header(d.direction);
    dj["polar"] = d.polar.to_string("x", "y");
    dj["vertical_multiplicity"] = d.vertical_multiplicity;
    dj["precision"] = d.precision;
    if (!d.error.empty()) dj["error"] = d.error;
    json pairs = json::array();
    for (const auto& p : d.pairs) pairs.push_back(pair_json(p));
    dj["pairs"] = pairs;
    dirs.push_back(dj);
  }
  j["directions"] = dirs;
  j["outcome"] = to_string(rep.outcome);
  if (rep.witness) {
    const auto& d = rep.directions[rep.witness->first];
    const PairReport& p = d.pairs[rep.witness->second];
    const int s = p.pair.polar ? p.pair.t_scale : 1;
    j["witness"] = {{"direction", d.direction.label},
                    {"pair", rep.witness->second},
                    {"curves", p.pair.describe()},
                    {"lhs", order_pair(p.verdict.lhs, s)},
                    {"threshold", order_pair(p.verdict.threshold, s)},
                    {"statement", statement(p.verdict, s)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

int exit_for(Aggregate a) {
  switch (a) {
    case Aggregate::Fail:
      return kFail;
    case Aggregate::Indeterminate:
      return kIndeterminate;
    case Aggregate::PassPolar:
      break;
  }
  return kPass;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Fail:
      return kFail;
    case Outcome::Indeterminate:
      return kIndeterminate;
    case Outcome::Pass:
      break;
  }
  return kPass;
}

// worst of two exit codes in the order pass < indeterminate < fail < error
int combine(int a, int b) {
  auto rank = [](int c) { return c == kPass ? 0 : c == kIndeterminate ? 1 : c == kFail ? 2 : 3; };
  return rank(a) >= rank(b) ? a : b;
}

std::string normalized(const std::string& text) { return to_string(parse_poly(text)); }

PolarDirection parse_direction(const std::string& spec, const BiPoly& f) {
  const std::string s = spec;
  if (s == "generic") return generic_direction(f);
  if (s == "x" || s == "fx" || s == "f_x") return x_direction();
  if (s == "y" || s == "fy" || s == "f_y") return y_direction();
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return PolarDirection::make(parse_constant(s.substr(0, i)), parse_constant(s.substr(i + 1)));
  }
  fail(ErrorKind::ParseError, "direction must be 'generic', 'f_x', 'f_y' or 'a,b': " + spec);
}

std::vector<PolarDirection> parse_directions(const std::vector<std::string>& specs, const BiPoly& f) {
  if (specs.empty()) return default_directions(f);
  std::vector<PolarDirection> out;
  for (const auto& item : specs) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ';'))
      if (!part.empty()) out.push_back(parse_direction(part, f));
  }
  return out;
}

struct Options {
  bool text = false;
  std::optional<int> prec;
  int max_prec = 512;
  std::string f, g, pairs;
  std::vector<std::string> dirs;
  std::string params;
  int p = 0, q = 0, bound = 8;
  bool verify = false;
};

std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

PrecisionPolicy policy(const Options& o) {
  PrecisionPolicy p;
  if (o.prec) p.initial = *o.prec;
  p.cap = std::max(o.max_prec, p.initial);
  return p;
}

int cmd_polar(const Options& o, json& c) {
  const BiPoly f = parse_bipoly(o.f);
  c["inputs"] = {{"f", normalized(o.f)}};
  const PrecisionPolicy pol = policy(o);
  c["precision"] = {{"initial", pol.initial}, {"cap", pol.cap}};
  json dirs = json::array();
  for (const auto& d : parse_directions(o.dirs, f)) {
    int k = pol.initial;
    PolarCurve pc = polar_pairs(f, d, k);
    std::vector<PairGeometry> geo;
    for (;;) {
      geo.clear();
      bool open = false;
      for (const auto& p : pc.pairs) {
        geo.push_back(pair_geometry(f, p));
        for (const auto* v : {&geo.back().e1, &geo.back().e2, &geo.back().contact})
          open = open || (!v->is_exact() && !v->is_infinite());
      }
      if (!open || k * 2 > pol.cap) break;
      k *= 2;
      pc = polar_pairs(f, d, k);
    }
    json dj = direction_header(d);
    dj["precision"] = k;
    dj["polar"] = pc.poly.to_string("x", "y");
    dj["vertical_multiplicity"] = pc.expansion.vertical_multiplicity;
    json br = json::array();
    for (const auto& b : pc.expansion.branches) br.push_back(branch_json(pc.poly, b));
    dj["branches"] = br;
    json pairs = json::array();
    for (std::size_t i = 0; i < pc.pairs.size(); ++i) {
      const PairCurve& p = pc.pairs[i];
      json pj;
      pj["sheets"] = json::array({sheet_json(p.branch1, p.sheet1, p.m1), sheet_json(p.branch2, p.sheet2, p.m2)});
      pj["curves"] = p.describe();
      pj["t_scale"] = p.t_scale;
      pj["orders"] = geometry_json(geo[i], p.t_scale);
      pairs.push_back(pj);
    }
    dj["pairs"] = pairs;
    const Packets pk = packets(f, pc);
    json levels = json::array();
    for (const auto& l : pk.levels) levels.push_back({{"contact", rational_string(l.threshold)}, {"packets", l.packets}});
    json coarse = json::array();
    for (std::size_t i = 0; i < pk.coarse.size(); ++i)
      coarse.push_back({{"branches", pk.coarse[i]}, {"e", pk.e[i] ? json(order_text(*pk.e[i])) : json(nullptr)}});
    dj["packets"] = {{"levels", levels}, {"coarse", coarse}};
    dirs.push_back(dj);
  }
  c["directions"] = dirs;
  json lines = json::array();
  for (const auto& l : exceptional_lines(f)) lines.push_back({{"line", l.to_string()}, {"multiplicity", l.multiplicity}});
  c["exceptional_lines"] = lines;
  c["radicals"] = radicals_json();
  c["outcome"] = "PASS";
  return kPass;
}

int cmd_check_is(const Options& o, json& c) {
  const BiPoly f = parse_bipoly(o.f), g = parse_bipoly(o.g);
  c["inputs"] = {{"f", normalized(o.f)}, {"g", normalized(o.g)}};
  const PrecisionPolicy pol = policy(o);
  c["precision"] = {{"initial", pol.initial}, {"cap", pol.cap}};
  const SaturationReport rep = check_saturation_polar(f, g, parse_directions(o.dirs, f), pol);
  const json sj = saturation_json(rep);
  for (auto& [k, v] : sj.items()) c[k] = v;
  c["radicals"] = radicals_json();
  return exit_for(rep.outcome);
}

int cmd_check_family(const Options& o, json& c) {
  const BiPoly F = parse_bipoly(o.f);
  const auto params = split_params(o.params);
  if (params.empty()) fail(ErrorKind::InvalidArgument, "--params needs at least one parameter");
  c["inputs"] = {{"F", normalized(o.f)}, {"params", params}};
  const PrecisionPolicy pol = policy(o);
  c["precision"] = {{"initial", pol.initial}, {"cap", pol.cap}};
  check_family_hypotheses(F);
  json per = json::array();
  int code = kPass;
  Aggregate agg = Aggregate::PassPolar;
  for (const auto& name : params) {
    const SymbolId id = SymbolTable::instance().parameter(name);
    const BiPoly g = F.dparam(id);
    const SaturationReport rep = check_saturation_polar(F, g, parse_directions(o.dirs, F), pol);
    json pj{{"parameter", name}, {"g", g.to_string("x", "y")}};
    const json sj = saturation_json(rep);
    for (auto& [k, v] : sj.items()) pj[k] = v;
    per.push_back(pj);
    code = combine(code, exit_for(rep.outcome));
    if (rep.outcome == Aggregate::Fail) agg = Aggregate::Fail;
    else if (rep.outcome == Aggregate::Indeterminate && agg != Aggregate::Fail) agg = Aggregate::Indeterminate;
  }
  c["parameters"] = per;
  c["radicals"] = radicals_json();
  c["outcome"] = to_string(agg);
  return code;
}

int cmd_check_fiberwise(const Options& o, json& c) {
  const BiPoly F = parse_bipoly(o.f);
  const auto params = split_params(o.params);
  const auto pairs = parse_pairs_file(o.pairs);
  c["inputs"] = {{"F", normalized(o.f)}, {"params", params}, {"pairs", pairs.size()}};
  const int k0 = o.prec.value_or(default_precision(F));
  c["precision"] = {{"initial", k0}, {"cap", std::max(o.max_prec, k0)}};
  std::vector<std::pair<std::string, BiPoly>> targets;
  if (params.empty()) targets.emplace_back("F", F);
  for (const auto& name : params) targets.emplace_back("dF/d" + name, F.dparam(SymbolTable::instance().parameter(name)));
  json out = json::array();
  int code = kPass;
  bool any_fail = false, any_undecided = false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairCurve& p = pairs[i];
    json pj{{"index", i}, {"curves", p.describe()}};
    try {
      require_fiber_pair(F, p, k0);
      json checks = json::array();
      for (const auto& [label, g] : targets) {
        Verdict v;
        int used = k0;
        for (int k = k0;; k *= 2) {
          used = k;
          v = check_fiber_pair(F, p, g, k);
          if (v.outcome != Outcome::Indeterminate || k * 2 > std::max(o.max_prec, k0)) break;
        }
        json vj = verdict_json(v, 1);
        vj["g"] = label;
        vj["precision"] = used;
        checks.push_back(vj);
        code = combine(code, exit_for(v.outcome));
        any_fail = any_fail || v.outcome == Outcome::Fail;
        any_undecided = any_undecided || v.outcome == Outcome::Indeterminate;
      }
      pj["checks"] = checks;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAFiberPair) throw;
      pj["error"] = e.what();
      code = combine(code, kError);
    }
    out.push_back(pj);
  }
  c["pairs"] = out;
  c["radicals"] = radicals_json();
  c["outcome"] = code == kError ? "ERROR" : any_fail ? "FAIL" : any_undecided ? "INDETERMINATE" : "PASS";
  return code;
}

int cmd_hp(const Options& o, json& c) {
  const BiPoly f = parse_bipoly(o.f);
  c["inputs"] = {{"f", normalized(o.f)}};
  const int k0 = policy(o).initial;
  const int cap = std::max(o.max_prec, k0);
  const auto lines = exceptional_lines(f);
  json dirs = json::array();
  int code = kPass;
  for (const auto& d : parse_directions(o.dirs, f)) {
    json dj = direction_header(d);
    json lj = json::array();
    for (const auto& line : lines) {
      json e{{"line", line.to_string()}, {"multiplicity", line.multiplicity}};
      for (int k = k0;; k *= 2) {
        try {
          const PolarCurve pc = polar_pairs(f, d, k);
          const HpData hp = hp_data(f, line, pc);
          json terms = json::array();
          for (const auto& t : hp.terms)
            terms.push_back({{"sheet", t.sheet},
                             {"branch", pc.sheets[static_cast<std::size_t>(t.sheet)].branch},
                             {"exponent", rational_string(t.exponent)},
                             {"coefficient", expression_text(t.coefficient)}});
          json ratios = json::array();
          for (const auto& r : hp.ratios)
            ratios.push_back({{"sheets", {r.sheet1, r.sheet2}}, {"ratio", expression_text(r.value)}});
          json props = json::array();
          for (const auto& p : pc.pairs) {
            if (!tangent_to(p.x1, line) || !tangent_to(p.x2, line)) continue;
            try {
              const InitialTermReport r = initial_term_check(f, d, p);
              props.push_back({{"curves", p.describe()},
                               {"deg_ratio_f", rational_string(r.deg_ratio_f)},
                               {"deg_ratio_fy", rational_string(r.deg_ratio_fy)},
                               {"ratio_f", expression_text(r.ratio_f)},
                               {"ratio_fy", expression_text(r.ratio_fy)},
                               {"holds", r.holds()}});
            } catch (const Error& err) {
              if (err.kind() == ErrorKind::IndeterminateOrder) throw;
              if (err.kind() != ErrorKind::HypothesisUnmet) throw;
            }
          }
          e["precision"] = k;
          e["initial_terms"] = terms;
          e["ratios"] = ratios;
          e["pair_ratio_checks"] = props;
          break;
        } catch (const Error& err) {
          if (err.kind() == ErrorKind::HypothesisUnmet) {
            e["note"] = err.what();
            break;
          }
          if ((err.kind() == ErrorKind::IndeterminateOrder || err.kind() == ErrorKind::PrecisionExceeded) &&
              k * 2 <= cap)
            continue;
          if (err.kind() == ErrorKind::IndeterminateOrder || err.kind() == ErrorKind::PrecisionExceeded) {
            e["note"] = err.what();
            code = combine(code, kIndeterminate);
            break;
          }
          throw;
        }
      }
      lj.push_back(e);
    }
    dj["lines"] = lj;
    dirs.push_back(dj);
  }
  c["directions"] = dirs;
  c["radicals"] = radicals_json();
  c["outcome"] = code == kPass ? "PASS" : "INDETERMINATE";
  return code;
}

int cmd_wedge(const Options& o, json& c) {
  c["inputs"] = {{"p", o.p}, {"q", o.q}, {"bound", o.bound}, {"verify", o.verify}};
  const auto rows = wedge_table(o.p, o.q, o.bound, o.verify, policy(o));
  json rj = json::array(), wedge = json::array();
  bool agree = true;
  std::optional<int> lip_i1, fr_i1;
  for (const auto& r : rows) {
    json e{{"i", r.i}, {"j", r.j}, {"lipsat", r.lipsat_inequality}, {"fr", r.fr_inequality}, {"wedge", r.wedge}};
    if (r.engine_verdict) {
      const bool pass = *r.engine_verdict == Aggregate::PassPolar;
      e["engine"] = to_string(*r.engine_verdict);
      e["agrees"] = pass == r.lipsat_inequality && *r.engine_verdict != Aggregate::Indeterminate;
      agree = agree && e["agrees"].get<bool>();
    }
    if (r.wedge) wedge.push_back({r.i, r.j});
    if (r.i == 1 && r.lipsat_inequality && !lip_i1) lip_i1 = r.j;
    if (r.i == 1 && r.fr_inequality && !fr_i1) fr_i1 = r.j;
    rj.push_back(e);
  }
  c["weights"] = {{"wx", o.q}, {"wy", o.p}, {"d", o.p * o.q}};
  c["wedge_points"] = wedge;
  c["i1_threshold"] = {{"lipsat", lip_i1 ? json(*lip_i1) : json(nullptr)}, {"fr", fr_i1 ? json(*fr_i1) : json(nullptr)}};
  c["fr_axis_bound"] = {{"weight_inequality", rational_string(fr_axis_bound(o.p, o.q))},
                        {"prose", rational_string(fr_axis_bound_prose(o.p, o.q))}};
  c["rows"] = rj;
  if (o.verify) c["engine_agrees"] = agree;
  c["outcome"] = agree ? "PASS" : "FAIL";
  return agree ? kPass : kFail;
}

int cmd_puiseux(const Options& o, json& c) {
  const BiPoly p = parse_bipoly(o.f);
  c["inputs"] = {{"P", normalized(o.f)}};
  const int k = o.prec.value_or(default_precision(p));
  c["precision"] = k;
  const Expansion ex = expand_branches(p, k);
  json br = json::array();
  for (const auto& b : ex.branches) br.push_back(branch_json(p, b));
  c["vertical_multiplicity"] = ex.vertical_multiplicity;
  c["branches"] = br;
  c["radicals"] = radicals_json();
  c["outcome"] = "PASS";
  return kPass;
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string expression_text(const FieldElem& e) {
  if (e.is_zero()) return "0";
  const auto [kn, pn] = split_content(e.num());
  const auto [kd, pd] = split_content(e.den());
  const Rational k = kn / kd;
  const bool plain_num = pn.is_constant();
  std::string out;
  if (plain_num) {
    out = rational_short(k * pn.constant_term().rational());
    if (!pn.constant_term().is_rational()) out = grouped(e.num());
  } else {
    const std::string body = k == 1 && pd.is_constant() ? pn.to_string() : grouped(pn);
    out = k == 1 ? body : k == -1 ? "-" + body : rational_short(k) + "*" + body;
  }
  if (!pd.is_constant()) out += "/" + grouped(pd);
  if (plain_num && !pn.constant_term().is_rational() && !(kd == 1)) out = "(" + out + ")/" + rational_short(kd);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lipsat: exact Lipschitz saturation checks along polar curve pairs", "lipsat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON certificate (default)");
  app.add_flag("--text", o.text, "indented text rendering of the certificate");
  app.add_option("--prec", o.prec, "branch precision K (y-normalized)")->check(CLI::Range(1, 100000));
  app.add_option("--max-prec", o.max_prec, "precision cap for escalation")->check(CLI::Range(1, 100000));

  auto* polar = app.add_subcommand("polar", "polar curves, branches, pairs and packets");
  polar->add_option("f", o.f, "germ f(x, y)")->required();
  polar->add_option("--dir", o.dirs, "direction 'a,b', 'f_x', 'f_y' or 'generic'");

  auto* check_is = app.add_subcommand("check-is", "test g against the saturation of J(f) on polar pairs");
  check_is->add_option("f", o.f, "germ f(x, y)")->required();
  check_is->add_option("g", o.g, "function g(x, y)")->required();
  check_is->add_option("--dirs", o.dirs, "directions separated by ';'");

  auto* family = app.add_subcommand("check-family", "infinitesimal Lipschitz equisingularity of a family");
  family->add_option("F", o.f, "family F(params, x, y)")->required();
  family->add_option("--params", o.params, "comma-separated parameters")->required();
  family->add_option("--dirs", o.dirs, "directions separated by ';'");

  auto* fiber = app.add_subcommand("check-fiberwise", "relative condition on supplied fiber pairs");
  fiber->add_option("F", o.f, "family or germ")->required();
  fiber->add_option("--pairs", o.pairs, "pairs file")->required();
  fiber->add_option("--params", o.params, "comma-separated parameters (default: test F itself)");

  auto* hp = app.add_subcommand("hp", "initial terms of f along polar sheets tangent to exceptional lines");
  hp->add_option("f", o.f, "germ f(x, y)")->required();
  hp->add_option("--dir", o.dirs, "direction 'a,b', 'f_x', 'f_y' or 'generic'");

  auto* wedge = app.add_subcommand("wedge", "compare the monomial inequality with the FR bound for x^p + y^q");
  wedge->add_option("p", o.p)->required();
  wedge->add_option("q", o.q)->required();
  wedge->add_option("--bound", o.bound, "max i + j")->check(CLI::Range(0, 200));
  wedge->add_flag("--verify", o.verify, "cross-check rows with the engine");

  auto* puiseux = app.add_subcommand("puiseux", "Newton-Puiseux branches of P(x, y)");
  puiseux->add_option("P", o.f, "polynomial with P(0,0) = 0")->required();

  json cert;
  cert["tool"] = "lipsat";
  cert["version"] = kVersion;
  int code = kError;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    cert["command"] = nullptr;
    cert["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
    cert["outcome"] = "ERROR";
    out << cert.dump(2) << "\n";
    return kError;
  }
  CLI::App* sub = app.get_subcommands().front();
  cert["command"] = sub->get_name();
  try {
    if (sub == polar) code = cmd_polar(o, cert);
    else if (sub == check_is) code = cmd_check_is(o, cert);
    else if (sub == family) code = cmd_check_family(o, cert);
    else if (sub == fiber) code = cmd_check_fiberwise(o, cert);
    else if (sub == hp) code = cmd_hp(o, cert);
    else if (sub == wedge) code = cmd_wedge(o, cert);
    else code = cmd_puiseux(o, cert);
  } catch (const Error& e) {
    err << e.what() << "\n";
    cert["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    cert["outcome"] = "ERROR";
    code = kError;
  }
  if (o.text) render_text(cert, out, 0);
  else out << cert.dump(2) << "\n";
  return code;
}

}  // namespace lipsat::cli
