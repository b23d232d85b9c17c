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

#include "lipsat/saturation.hpp"

#include <algorithm>

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

OrderValue add(const OrderValue& a, const OrderValue& b) {
  if (a.is_infinite() || b.is_infinite()) return OrderValue::infinite();
  if (a.is_exact() && b.is_exact()) return OrderValue::exact(a.value + b.value);
  return OrderValue::at_least(a.value + b.value);
}

OrderValue sub_exact(const OrderValue& a, const Rational& s) {
  OrderValue r = a;
  if (!r.is_infinite()) r.value -= s;
  return r;
}

// Minimum of orders, AtLeast when an undecided entry could undercut it.
OrderValue min_order(const std::vector<OrderValue>& os) {
  std::optional<Rational> exact, bound;
  for (const auto& o : os) {
    if (o.is_exact()) {
      if (!exact || o.value < *exact) exact = o.value;
    } else if (!o.is_infinite()) {
      if (!bound || o.value < *bound) bound = o.value;
    }
  }
  if (!exact && !bound) return OrderValue::infinite();
  if (exact && (!bound || *exact <= *bound)) return OrderValue::exact(*exact);
  return OrderValue::at_least(*bound);
}

// all of a_i >= b_i; nullopt if any comparison is undecided and none fails
std::optional<bool> all_geq(const std::vector<std::pair<OrderValue, OrderValue>>& cmp) {
  bool undecided = false;
  for (const auto& [a, b] : cmp) {
    const auto r = order_geq(a, b);
    if (!r) undecided = true;
    else if (!*r) return false;
  }
  if (undecided) return std::nullopt;
  return true;
}

// num / den when both are exact and den divides num as a polynomial.
std::optional<PuiseuxSeries> exact_quotient(PuiseuxSeries num, PuiseuxSeries den) {
  if (!num.is_exact() || !den.is_exact() || den.terms().empty()) return std::nullopt;
  unify(num, den);
  auto rest = num.terms();
  const auto& dt = den.terms();
  const auto [dtop, dlead] = *dt.rbegin();
  if (rest.empty()) return PuiseuxSeries();
  const std::int64_t lowest = rest.begin()->first - dt.begin()->first;
  std::map<std::int64_t, FieldElem> quot;
  const FieldElem inv = dlead.inverse();
  for (int steps = 0; !rest.empty(); ++steps) {
    const auto [top, c] = *rest.rbegin();
    if (top - dtop < lowest || steps > 4096) return std::nullopt;
    const std::int64_t e = top - dtop;
    const FieldElem qc = c * inv;
    quot.emplace(e, qc);
    for (const auto& [de, dc] : dt) {
      auto it = rest.try_emplace(de + e).first;
      it->second -= qc * dc;
      if (it->second.is_zero()) rest.erase(it);
    }
  }
  return PuiseuxSeries::from_terms(quot, num.ramification());
}

PuiseuxSeries quotient(const PuiseuxSeries& num, const PuiseuxSeries& den, int k) {
  if (auto q = exact_quotient(num, den)) return *q;
  return num * den.invert(static_cast<std::int64_t>(k) * den.ramification());
}

// second component of v - (v1/p1) p, as (v2 p1 - v1 p2) / p1 so exact
// cancellation survives truncated division
PuiseuxSeries eliminate(const PairVector& v, const PairVector& p, int k) {
  const PuiseuxSeries cross = v.c2 * p.c1 - v.c1 * p.c2;
  if (cross.is_identically_zero()) return cross;
  return quotient(cross, p.c1, k);
}

Outcome from_bool(std::optional<bool> b) {
  if (!b) return Outcome::Indeterminate;
  return *b ? Outcome::Pass : Outcome::Fail;
}

LeadingTerm leading(const std::string& name, const PuiseuxSeries& s) {
  LeadingTerm t{name, s.order(), std::nullopt};
  if (t.order.is_exact()) t.coefficient = s.leading_coefficient();
  return t;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "PASS";
    case Outcome::Fail:
      return "FAIL";
    case Outcome::Indeterminate:
      break;
  }
  return "INDETERMINATE";
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::GeneralEngine:
      return "general-engine";
    case Criterion::ZeroDeterminant:
      return "zero-determinant";
    case Criterion::MinimalDeterminant:
      return "minimal-determinant";
    case Criterion::RegularQuotient:
      break;
  }
  return "regular-quotient";
}

std::string to_string(Aggregate a) {
  switch (a) {
    case Aggregate::Fail:
      return "FAIL";
    case Aggregate::PassPolar:
      return "PASS_POLAR";
    case Aggregate::Indeterminate:
      break;
  }
  return "INDETERMINATE";
}

int default_precision(const BiPoly& f, const BiPoly& g) {
  return 4 * std::max(f.total_degree(), g.is_zero() ? 0 : g.total_degree()) + 16;
}

PairVector doubled(const BiPoly& h, const PairCurve& p) {
  PairVector v{substitute(h, p.x1, p.y1), substitute(h, p.x2, p.y2)};
  unify(v.c1, v.c2);
  return v;
}

PulledBackModule pair_module(const BiPoly& f, const PairCurve& p) {
  PulledBackModule m;
  const PuiseuxSeries dx = p.x1 - p.x2, dy = p.y1 - p.y2;
  const auto geq = order_geq(dx.order(), dy.order());
  if (!geq) fail(ErrorKind::IndeterminateOrder, "diagonal generator undecided at current precision");
  m.delta = *geq ? dy : dx;
  const BiPoly fx = f.dx(), fy = f.dy();
  const PairVector vx = doubled(fx, p), vy = doubled(fy, p);
  m.generators = {vx, vy, {PuiseuxSeries(), vx.c2 * m.delta}, {PuiseuxSeries(), vy.c2 * m.delta}};
  m.labels = {"(f_x)_D", "(f_y)_D", "(0, f_x*delta)", "(0, f_y*delta)"};
  return m;
}

ReducedBasis reduce(const PulledBackModule& m, int k) {
  ReducedBasis r;
  std::vector<OrderValue> first;
  for (const auto& g : m.generators) first.push_back(g.c1.order());
  r.a = min_order(first);
  if (r.a.is_exact()) {
    for (std::size_t i = 0; i < first.size(); ++i)
      if (first[i] == r.a) {
        r.pivot = i;
        break;
      }
  }
  std::vector<OrderValue> second;
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    if (r.pivot && i == *r.pivot) continue;
    const PairVector& g = m.generators[i];
    PuiseuxSeries s = g.c2;
    if (r.pivot && !g.c1.is_identically_zero()) {
      const PairVector& pv = m.generators[*r.pivot];
      s = eliminate(g, pv, k);
    }
    second.push_back(s.order());
    r.second.push_back(std::move(s));
  }
  r.b = min_order(second);
  return r;
}

Verdict module_membership(const PairVector& v, const PulledBackModule& m, int k) {
  Verdict out;
  const ReducedBasis r = reduce(m, k);
  const OrderValue o1 = v.c1.order();
  PuiseuxSeries w = v.c2;
  if (!r.pivot) {
    // no pivot: the first component must vanish
    if (!r.a.is_infinite() || !o1.is_infinite()) {
      out.stage = "first";
      out.lhs = o1;
      out.threshold = r.a;
      out.outcome = (r.a.is_infinite() && o1.is_exact()) ? Outcome::Fail : Outcome::Indeterminate;
      return out;
    }
  } else {
    const auto ok = order_geq(o1, r.a);
    if (!ok || !*ok) {
      out.stage = "first";
      out.lhs = o1;
      out.threshold = r.a;
      out.outcome = from_bool(ok);
      return out;
    }
    if (!v.c1.is_identically_zero()) {
      const PairVector& pv = m.generators[*r.pivot];
      w = eliminate(v, pv, k);
    }
  }
  out.stage = "second";
  out.lhs = w.order();
  out.threshold = r.b;
  out.outcome = from_bool(order_geq(out.lhs, out.threshold));
  out.residual = w;
  return out;
}

PuiseuxSeries det_D(const BiPoly& g, const BiPoly& f, const PairCurve& p) {
  const PairVector gv = doubled(g, p), fy = doubled(f.dy(), p);
  return gv.c1 * fy.c2 - gv.c2 * fy.c1;
}

PairReport check_pair(const BiPoly& g, const BiPoly& f, const PairCurve& p, const PolarDirection& d, int k) {
  PairReport rep;
  rep.pair = p;
  rep.precision = k;
  rep.geometry = pair_geometry(f, p);
  const PairVector gv = doubled(g, p), fyv = doubled(f.dy(), p);
  rep.i1 = gv.c1.order();
  rep.i2 = gv.c2.order();
  const PuiseuxSeries D = det_D(g, f, p);
  rep.det_order = D.order();
  rep.leading = {leading("g1", gv.c1), leading("g2", gv.c2), leading("f_y1", fyv.c1), leading("f_y2", fyv.c2),
                 leading("D", D)};
  try {
    rep.verdict = module_membership(gv, pair_module(f, p), k);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IndeterminateOrder && e.kind() != ErrorKind::NotAUnit) throw;
    rep.verdict.outcome = Outcome::Indeterminate;
  }
  if (rep.verdict.residual) rep.leading.push_back(leading("residual", *rep.verdict.residual));

  const PairGeometry& geo = rep.geometry;
  const OrderValue &e1 = geo.e1, &e2 = geo.e2, &C = geo.contact;
  const bool polar_form = p.polar && d.has_fx();
  const std::string no_polar = "pair is not a polar pair of a direction f_x - a*f_y";

  ShortcutResult s1;
  s1.criterion = Criterion::ZeroDeterminant;
  if (!polar_form) {
    s1.reason = no_polar;
  } else if (!D.is_identically_zero()) {
    s1.reason = D.order().is_exact() ? "D is not identically zero" : "D undecided at current precision";
  } else {
    const auto ok = all_geq({{rep.i1, e1}, {rep.i2, e2}});
    if (ok) {
      s1.applied = true;
      s1.outcome = from_bool(ok);
      s1.lhs = rep.i1;
      s1.threshold = e1;
    } else {
      s1.reason = "orders undecided at current precision";
    }
  }

  ShortcutResult s2;
  s2.criterion = Criterion::MinimalDeterminant;
  if (!polar_form) {
    s2.reason = no_polar;
  } else {
    const OrderValue expected = min_order({add(rep.i1, e2), add(rep.i2, e1)});
    if (!rep.det_order.is_exact() || !expected.is_exact()) {
      s2.reason = "orders undecided or infinite";
    } else if (!(rep.det_order == expected)) {
      s2.reason = "ord D = " + rep.det_order.to_string() + " differs from min(i+e) = " + expected.to_string();
    } else {
      const auto ok = all_geq({{rep.i1, add(e1, C)}, {rep.i2, add(e2, C)}});
      if (ok) {
        s2.applied = true;
        s2.outcome = from_bool(ok);
        // report the failing sheet, or the first one on a pass
        const bool report_second = !*ok && order_geq(rep.i1, add(e1, C)).value_or(true);
        s2.lhs = report_second ? rep.i2 : rep.i1;
        s2.threshold = report_second ? add(e2, C) : add(e1, C);
      } else {
        s2.reason = "orders undecided at current precision";
      }
    }
  }

  ShortcutResult s3;
  s3.criterion = Criterion::RegularQuotient;
  if (!polar_form) {
    s3.reason = no_polar;
  } else {
    const auto regular = all_geq({{rep.i1, e1}, {rep.i2, e2}});
    if (!regular) {
      s3.reason = "regularity of g/f_y undecided";
    } else if (!*regular) {
      s3.reason = "g/f_y is not regular along both sheets";
    } else if (!e1.is_exact() || !e2.is_exact() || !C.is_exact()) {
      s3.reason = "orders undecided";
    } else {
      const OrderValue lhs = sub_exact(rep.det_order, e1.value + e2.value);
      const auto ok = order_geq(lhs, C);
      if (ok) {
        s3.applied = true;
        s3.outcome = from_bool(ok);
        s3.lhs = lhs;
        s3.threshold = C;
      } else {
        s3.reason = "ord D undecided at current precision";
      }
    }
  }
  rep.shortcuts = {s1, s2, s3};

  if (rep.verdict.outcome != Outcome::Indeterminate) {
    for (const auto& s : rep.shortcuts)
      if (s.applied && s.outcome != rep.verdict.outcome)
        fail(ErrorKind::InternalCriterionMismatch, to_string(s.criterion) + " gives " + to_string(s.outcome) +
                                                       " but the general engine gives " +
                                                       to_string(rep.verdict.outcome) + " on " + p.describe());
  }
  return rep;
}

namespace {

DirectionReport run_direction(const BiPoly& f, const BiPoly& g, const PolarDirection& d, PrecisionPolicy policy) {
  DirectionReport out;
  out.direction = d;
  out.polar = polar_poly(f, d);
  for (int k = policy.initial;; k *= 2) {
    out.precision = k;
    out.pairs.clear();
    out.error.clear();
    bool unresolved = false;
    try {
      const PolarCurve pc = polar_pairs(f, d, k);
      out.vertical_multiplicity = pc.expansion.vertical_multiplicity;
      for (const auto& p : pc.pairs) {
        out.pairs.push_back(check_pair(g, f, p, d, k));
        if (out.pairs.back().verdict.outcome == Outcome::Indeterminate) unresolved = true;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExceeded && e.kind() != ErrorKind::IndeterminateOrder) throw;
      out.error = e.what();
      unresolved = true;
    }
    if (!unresolved || k * 2 > policy.cap) return out;
  }
}

}  // namespace

SaturationReport check_saturation_polar(const BiPoly& f, const BiPoly& g, const std::vector<PolarDirection>& dirs,
                                        PrecisionPolicy policy) {
  SaturationReport rep;
  rep.f = f;
  rep.g = g;
  bool indeterminate = false;
  for (const auto& d : dirs) {
    rep.directions.push_back(run_direction(f, g, d, policy));
    const DirectionReport& dr = rep.directions.back();
    if (!dr.error.empty()) indeterminate = true;
    for (std::size_t i = 0; i < dr.pairs.size(); ++i) {
      const Outcome o = dr.pairs[i].verdict.outcome;
      if (o == Outcome::Fail && !rep.witness) rep.witness = {{rep.directions.size() - 1, i}};
      if (o == Outcome::Indeterminate) indeterminate = true;
    }
  }
  rep.outcome = rep.witness ? Aggregate::Fail : indeterminate ? Aggregate::Indeterminate : Aggregate::PassPolar;
  return rep;
}

void check_family_hypotheses(const BiPoly& F) {
  if (!F.coeff(0, 0).is_zero() || !F.coeff(1, 0).is_zero() || !F.coeff(0, 1).is_zero())
    fail(ErrorKind::HypothesisUnmet, "the family must be singular along the parameter axis");
}

std::vector<FamilyReport> check_family(const BiPoly& F, const std::vector<std::string>& params,
                                       PrecisionPolicy policy) {
  check_family_hypotheses(F);
  std::vector<FamilyReport> out;
  for (const auto& name : params) {
    const SymbolId id = SymbolTable::instance().parameter(name);
    const BiPoly g = F.dparam(id);
    out.push_back({name, check_saturation_polar(F, g, default_directions(F), policy)});
  }
  return out;
}

void require_fiber_pair(const BiPoly& f, const PairCurve& p, int k) {
  const OrderValue o = (substitute(f, p.x1, p.y1) - substitute(f, p.x2, p.y2)).order();
  if (o.is_infinite()) return;
  if (o.is_exact() || o.value < k)
    fail(ErrorKind::NotAFiberPair, "f o phi1 - f o phi2 has order " + o.to_string());
}

Verdict check_fiber_pair(const BiPoly& f, const PairCurve& p, const BiPoly& g, int k) {
  require_fiber_pair(f, p, k);
  return module_membership(doubled(g, p), pair_module(f, p), k);
}

Verdict verify_tau_derivative_membership(const BiPoly& f, const PairCurve& p, int k) {
  const PairVector fv = doubled(f, p);
  PairVector v{fv.c1.tau_derivative(), fv.c2.tau_derivative()};
  return module_membership(v, pair_module(f, p), k);
}

Verdict verify_fiber_pair_membership(const BiPoly& f, const PairCurve& p, int k) { return check_fiber_pair(f, p, f, k); }

}  // namespace lipsat
