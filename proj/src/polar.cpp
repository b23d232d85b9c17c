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

#include "lipsat/polar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

// f as a polynomial over Q(zeta)[params, x, y] after clearing denominators.
MPoly as_mpoly(const BiPoly& f) {
  auto& table = SymbolTable::instance();
  const SymbolId sx = table.parameter("x");
  const SymbolId sy = table.parameter("y");
  MPoly lcm(1);
  for (const auto& [k, c] : f.terms()) {
    const MPoly g = gcd(lcm, c.den());
    lcm = lcm * c.den().exact_div(g);
  }
  MPoly out;
  for (const auto& [k, c] : f.terms()) {
    MPoly term = c.num() * lcm.exact_div(c.den());
    out += term * MPoly::var(sx, static_cast<std::uint32_t>(k.first)) * MPoly::var(sy, static_cast<std::uint32_t>(k.second));
  }
  return out;
}

// Whether p has a factor through the origin: a nonconstant factor in x, y
// vanishing at x = y = 0.
bool vanishing_component(const MPoly& g) {
  auto& table = SymbolTable::instance();
  const SymbolId sx = *table.find("x");
  const SymbolId sy = *table.find("y");
  if (!g.has_symbol(sx) && !g.has_symbol(sy)) return false;
  for (const auto& [m, c] : g.terms())
    if (m.exponent(sx) == 0 && m.exponent(sy) == 0) return false;
  return true;
}

std::string unused_name(const BiPoly& f, const std::string& base) {
  auto& table = SymbolTable::instance();
  for (int n = 0;; ++n) {
    const std::string cand = n == 0 ? base : base + std::to_string(n);
    const auto id = table.find(cand);
    if (!id || !f.has_symbol(*id)) return cand;
  }
}

}  // namespace

PolarDirection PolarDirection::make(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::InvalidArgument, "polar direction must be nonzero");
  PolarDirection d;
  if (a.is_zero()) {
    d.a = FieldElem();
    d.b = FieldElem(1);
    d.label = "f_y";
    return d;
  }
  d.a = FieldElem(1);
  d.b = b / a;
  if (d.b.is_zero()) {
    d.label = "f_x";
  } else {
    d.label = "f_x + (" + d.b.to_string() + ")*f_y";
  }
  return d;
}

PolarDirection x_direction() { return PolarDirection::make(FieldElem(1), FieldElem()); }
PolarDirection y_direction() { return PolarDirection::make(FieldElem(), FieldElem(1)); }

PolarDirection generic_direction(const BiPoly& f) {
  const std::string name = unused_name(f, "c");
  PolarDirection d = PolarDirection::make(FieldElem(1), -FieldElem::parameter(name));
  d.label = "f_x - " + name + "*f_y";
  return d;
}

std::vector<PolarDirection> default_directions(const BiPoly& f) {
  return {x_direction(), y_direction(), generic_direction(f)};
}

PairCurve PairCurve::swapped() const {
  PairCurve p = *this;
  std::swap(p.x1, p.x2);
  std::swap(p.y1, p.y2);
  std::swap(p.branch1, p.branch2);
  std::swap(p.sheet1, p.sheet2);
  std::swap(p.m1, p.m2);
  return p;
}

std::string series_in_t(const PuiseuxSeries& x, int scale, const std::string& var) {
  // exponents e/ram in y become e*scale/ram in t
  std::map<std::int64_t, FieldElem> terms;
  const std::int64_t ram = x.ramification();
  const std::int64_t g = std::gcd<std::int64_t>(scale, ram);
  const std::int64_t new_ram = ram / g;
  for (const auto& [e, c] : x.terms()) terms.emplace(e * (scale / g), c);
  std::optional<std::int64_t> tr;
  if (x.trunc_num()) tr = *x.trunc_num() * (scale / g);
  return PuiseuxSeries::from_terms(terms, new_ram, tr).to_string(var);
}

std::string t_order_string(const OrderValue& o, int scale) {
  OrderValue s = o;
  s.value *= Rational(scale);
  return s.to_string();
}

std::string PairCurve::describe() const {
  const int s = polar ? t_scale : 1;
  // the curve parameter is t unless a coefficient already uses that name
  std::string var = "t";
  for (int n = 0;; ++n) {
    var = n == 0 ? "t" : "t" + std::to_string(n);
    const auto id = SymbolTable::instance().find(var);
    bool used = false;
    for (const auto* c : {&x1, &y1, &x2, &y2})
      for (const auto& [e, v] : c->terms())
        for (const SymbolId u : v.symbols()) used = used || (id && u == *id);
    if (!used) break;
  }
  return "((" + series_in_t(x1, s, var) + ", " + series_in_t(y1, s, var) + "), (" + series_in_t(x2, s, var) + ", " +
         series_in_t(y2, s, var) + "))";
}

void check_isolated(const BiPoly& f) {
  if (f.is_zero() || !f.coeff(0, 0).is_zero())
    fail(ErrorKind::NotIsolated, "f must vanish at the origin and be nonzero");
  const MPoly F = as_mpoly(f);
  const MPoly Fx = as_mpoly(f.dx());
  const MPoly Fy = as_mpoly(f.dy());
  if (Fx.is_zero() && Fy.is_zero()) fail(ErrorKind::NotIsolated, "f has no nonzero partial derivative");
  const MPoly g = gcd(F, gcd(Fx, Fy));
  if (vanishing_component(g))
    fail(ErrorKind::NotIsolated, "f has a singular component through the origin: " + g.to_string());
}

BiPoly polar_poly(const BiPoly& f, const PolarDirection& d) {
  check_isolated(f);
  const BiPoly p = f.dx().scaled(d.a) + f.dy().scaled(d.b);
  if (p.is_zero()) fail(ErrorKind::NotIsolated, "polar curve is identically zero");
  const MPoly g = gcd(as_mpoly(f), as_mpoly(p));
  if (vanishing_component(g))
    fail(ErrorKind::NotIsolated, "polar " + d.label + " shares a component with f: " + g.to_string());
  return p;
}

PolarCurve polar_pairs(const BiPoly& f, const PolarDirection& d, int k) {
  PolarCurve pc;
  pc.direction = d;
  pc.poly = polar_poly(f, d);
  if (!pc.poly.coeff(0, 0).is_zero()) return pc;  // no polar branch through the origin
  pc.expansion = expand_branches(pc.poly, k);
  for (std::size_t b = 0; b < pc.expansion.branches.size(); ++b) {
    const Branch& br = pc.expansion.branches[b];
    const auto sheets = conjugates(br);
    for (std::size_t s = 0; s < sheets.size(); ++s)
      pc.sheets.push_back({static_cast<int>(b), static_cast<int>(s), br.m, sheets[s]});
  }
  const PuiseuxSeries y = PuiseuxSeries::monomial(FieldElem(1), 1);
  for (std::size_t i = 0; i < pc.sheets.size(); ++i) {
    for (std::size_t j = i + 1; j < pc.sheets.size(); ++j) {
      const Sheet& a = pc.sheets[i];
      const Sheet& b = pc.sheets[j];
      PairCurve p;
      p.x1 = a.x;
      p.x2 = b.x;
      p.y1 = y;
      p.y2 = y;
      p.m1 = a.m;
      p.m2 = b.m;
      p.t_scale = static_cast<int>(lcm64(a.m, b.m));
      p.branch1 = a.branch;
      p.sheet1 = a.conj;
      p.branch2 = b.branch;
      p.sheet2 = b.conj;
      p.polar = true;
      pc.pairs.push_back(std::move(p));
    }
  }
  return pc;
}

PairGeometry pair_geometry(const BiPoly& f, const PairCurve& p) {
  PairGeometry g;
  const BiPoly fy = f.dy();
  g.e1 = substitute(fy, p.x1, p.y1).order();
  g.e2 = substitute(fy, p.x2, p.y2).order();
  g.contact = (p.x1 - p.x2).order();
  const OrderValue dy = (p.y1 - p.y2).order();
  g.delta_ord = order_geq(g.contact, dy).value_or(false) ? dy : g.contact;
  return g;
}

Packets packets(const BiPoly& f, const PolarCurve& polar) {
  Packets out;
  const int nb = static_cast<int>(polar.expansion.branches.size());
  if (nb == 0) return out;
  // best contact between branches over all sheet identifications
  std::map<std::pair<int, int>, Rational> best;
  for (const auto& p : polar.pairs) {
    if (p.branch1 == p.branch2) continue;
    const OrderValue c = (p.x1 - p.x2).order();
    const Rational v = c.value;
    auto key = std::minmax(p.branch1, p.branch2);
    auto it = best.find(key);
    if (it == best.end() || v > it->second) best[key] = v;
  }
  auto partition = [&](auto&& joined) {
    std::vector<int> parent(static_cast<std::size_t>(nb));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (const auto& [key, v] : best)
      if (joined(v)) parent[static_cast<std::size_t>(find(key.first))] = find(key.second);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < nb; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> res;
    for (auto& [r, g] : groups) res.push_back(g);
    std::sort(res.begin(), res.end());
    return res;
  };
  std::vector<Rational> thresholds;
  for (const auto& [key, v] : best) thresholds.push_back(v);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  for (const auto& t : thresholds) out.levels.push_back({t, partition([&](const Rational& v) { return v >= t; })});
  if (thresholds.empty()) {
    out.coarse = partition([](const Rational&) { return false; });
  } else {
    const Rational lo = thresholds.front();
    out.coarse = partition([&](const Rational& v) { return v > lo; });
  }
  const BiPoly fy = f.dy();
  const PuiseuxSeries y = PuiseuxSeries::monomial(FieldElem(1), 1);
  for (const auto& group : out.coarse) {
    std::optional<OrderValue> common;
    bool constant = true;
    for (const auto& s : polar.sheets) {
      if (std::find(group.begin(), group.end(), s.branch) == group.end()) continue;
      const OrderValue e = substitute(fy, s.x, y).order();
      if (!common) common = e;
      else if (!(*common == e)) constant = false;
    }
    out.e.push_back(constant ? common : std::nullopt);
  }
  return out;
}

std::string TangentLine::to_string() const {
  if (!lambda) return "y = 0";
  if (lambda->is_zero()) return "x = 0";
  return "x = (" + lambda->to_string() + ")*y";
}

std::vector<TangentLine> exceptional_lines(const BiPoly& f) {
  std::vector<TangentLine> out;
  if (f.is_zero()) return out;
  if (!f.coeff(0, 0).is_zero()) fail(ErrorKind::InvalidArgument, "f must vanish at the origin");
  const int d = f.order();
  const BiPoly h = f.homogeneous_part(d);
  // H(z, 1) = sum c_i z^i with c_i the coefficient of x^i y^(d-i)
  std::vector<FieldElem> coeffs(static_cast<std::size_t>(d + 1));
  for (const auto& [k, c] : h.terms()) coeffs[static_cast<std::size_t>(k.first)] = c;
  const int ymult = h.y_valuation();
  const int xmult = h.x_valuation();
  if (xmult >= 2) out.push_back({FieldElem(), xmult});
  std::vector<FieldElem> rest(coeffs.begin() + xmult, coeffs.end());
  const auto factors = squarefree_decomposition(UPoly(rest));
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (const auto& r : solve_face(factors[i], 1)) out.push_back({r.value, static_cast<int>(i) + 1});
  }
  if (ymult >= 2) out.push_back({std::nullopt, ymult});
  return out;
}

bool tangent_to(const PuiseuxSeries& x, const TangentLine& line) {
  const OrderValue o = x.order();
  if (!line.lambda) return o.is_exact() && o.value < 1;
  if (o.is_infinite()) return line.lambda->is_zero();
  if (!o.is_exact()) fail(ErrorKind::IndeterminateOrder, "tangency undecided at current precision");
  if (o.value > 1) return line.lambda->is_zero();
  if (o.value < 1) return false;
  return x.leading_coefficient() == *line.lambda;
}

HpData hp_data(const BiPoly& f, const TangentLine& line, const PolarCurve& polar) {
  HpData hp;
  hp.line = line;
  const PuiseuxSeries y = PuiseuxSeries::monomial(FieldElem(1), 1);
  for (std::size_t i = 0; i < polar.sheets.size(); ++i) {
    if (!tangent_to(polar.sheets[i].x, line)) continue;
    const PuiseuxSeries v = substitute(f, polar.sheets[i].x, y);
    const OrderValue o = v.order();
    if (!o.is_exact()) fail(ErrorKind::IndeterminateOrder, "initial term of f along a polar sheet undecided");
    hp.terms.push_back({static_cast<int>(i), o.value, v.leading_coefficient()});
  }
  for (std::size_t a = 0; a < hp.terms.size(); ++a)
    for (std::size_t b = a + 1; b < hp.terms.size(); ++b)
      if (hp.terms[a].exponent == hp.terms[b].exponent)
        hp.ratios.push_back({hp.terms[a].sheet, hp.terms[b].sheet, hp.terms[b].coefficient / hp.terms[a].coefficient});
  if (hp.terms.empty()) fail(ErrorKind::HypothesisUnmet, "no polar sheet is tangent to " + line.to_string());
  return hp;
}

bool InitialTermReport::holds() const {
  if (!degrees_equal) return false;
  return deg_ratio_f == 0 ? initial_terms_equal : corrected_equal;
}

InitialTermReport initial_term_check(const BiPoly& f, const PolarDirection& d, const PairCurve& p) {
  if (!d.has_fx()) fail(ErrorKind::HypothesisUnmet, "direction is not of the form f_x - c*f_y");
  if (!p.polar) fail(ErrorKind::HypothesisUnmet, "pair is not a polar pair");
  std::optional<TangentLine> common;
  for (const auto& line : exceptional_lines(f)) {
    if (!line.lambda) continue;
    if (tangent_to(p.x1, line) && tangent_to(p.x2, line)) {
      common = line;
      break;
    }
  }
  if (!common) fail(ErrorKind::HypothesisUnmet, "sheets are not tangent to a common exceptional line");
  const PuiseuxSeries f1 = substitute(f, p.x1, p.y1), f2 = substitute(f, p.x2, p.y2);
  const BiPoly fy = f.dy();
  const PuiseuxSeries g1 = substitute(fy, p.x1, p.y1), g2 = substitute(fy, p.x2, p.y2);
  for (const auto* s : {&f1, &f2, &g1, &g2})
    if (!s->order().is_exact()) fail(ErrorKind::IndeterminateOrder, "initial terms undecided at current precision");
  InitialTermReport r;
  const Rational p1 = f1.order().value, p2 = f2.order().value;
  r.deg_ratio_f = p2 - p1;
  r.deg_ratio_fy = g2.order().value - g1.order().value;
  r.ratio_f = f2.leading_coefficient() / f1.leading_coefficient();
  r.ratio_fy = g2.leading_coefficient() / g1.leading_coefficient();
  r.degrees_equal = r.deg_ratio_f == r.deg_ratio_fy;
  r.initial_terms_equal = r.ratio_f == r.ratio_fy;
  r.corrected_equal = r.ratio_f == FieldElem(p1 / p2) * r.ratio_fy;
  return r;
}

}  // namespace lipsat
