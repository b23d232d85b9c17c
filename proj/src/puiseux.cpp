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

#include "lipsat/puiseux.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

std::atomic<std::uint64_t> g_verify_count{0};

// Convex lower hull between the lowest point on the y-axis and the
// leftmost point on the x-axis.
std::vector<std::pair<int, int>> lower_hull(const BiPoly& q) {
  std::map<int, int> lowest;  // deg_x -> min deg_y
  for (const auto& [k, c] : q.terms()) {
    auto it = lowest.find(k.first);
    if (it == lowest.end() || k.second < it->second) lowest[k.first] = k.second;
  }
  int right = -1;
  for (const auto& [i, j] : lowest)
    if (j == 0) {
      right = i;
      break;
    }
  std::vector<std::pair<int, int>> hull;
  for (const auto& [i, j] : lowest) {
    if (right >= 0 && i > right) break;
    while (hull.size() >= 2) {
      const auto& p0 = hull[hull.size() - 2];
      const auto& p1 = hull.back();
      // drop p1 unless it lies strictly below segment p0 -> (i, j)
      const long cross = static_cast<long>(p1.first - p0.first) * (j - p0.second) -
                         static_cast<long>(p1.second - p0.second) * (i - p0.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.emplace_back(i, j);
  }
  return hull;
}

std::vector<NewtonSegment> segments_of(const BiPoly& q) {
  const auto hull = lower_hull(q);
  std::vector<NewtonSegment> segs;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto [il, jl] = hull[s];
    const auto [ir, jr] = hull[s + 1];
    const std::int64_t num = jl - jr, den = ir - il;
    const std::int64_t g = std::gcd(num, den);
    NewtonSegment seg;
    seg.a = num / g;
    seg.b = den / g;
    seg.slope = Rational(static_cast<long>(seg.a), static_cast<unsigned long>(seg.b));
    std::vector<FieldElem> face(static_cast<std::size_t>(ir - il + 1));
    for (const auto& [k, c] : q.terms()) {
      // on the supporting line j*b + i*a = jl*b + il*a
      if (k.first < il || k.first > ir) continue;
      if (static_cast<std::int64_t>(k.second) * seg.b + static_cast<std::int64_t>(k.first) * seg.a ==
          static_cast<std::int64_t>(jl) * seg.b + static_cast<std::int64_t>(il) * seg.a)
        face[static_cast<std::size_t>(k.first - il)] = c;
    }
    seg.face = UPoly(std::move(face));
    segs.push_back(std::move(seg));
  }
  // hull runs from the y-axis (large slope) toward the x-axis; report increasing slope
  std::reverse(segs.begin(), segs.end());
  return segs;
}

// Q(T^a (z0 + X), T^b) / T^shift.
BiPoly blow_up(const BiPoly& q, std::int64_t a, std::int64_t b, const FieldElem& z0, std::int64_t& shift) {
  shift = -1;
  for (const auto& [k, c] : q.terms()) {
    const std::int64_t e = a * k.first + b * k.second;
    if (shift < 0 || e < shift) shift = e;
  }
  const BiPoly lin = BiPoly(z0) + BiPoly::x();
  std::vector<BiPoly> powers{BiPoly(FieldElem(1))};
  for (int i = 1; i <= q.degree_x(); ++i) powers.push_back(powers.back() * lin);
  BiPoly r;
  for (const auto& [k, c] : q.terms()) {
    const std::int64_t e = a * k.first + b * k.second - shift;
    for (const auto& [pk, pc] : powers[static_cast<std::size_t>(k.first)].terms())
      r.add_term(pk.first, static_cast<int>(e), pc * c);
  }
  return r;
}

// Power series root X(T), X(0) = 0, of Q with Q(0,0) = 0 and Q_X(0,0) != 0,
// known modulo T^prec. Newton iteration doubling the precision.
PuiseuxSeries regular_root(const BiPoly& q, std::int64_t prec) {
  const PuiseuxSeries tser = PuiseuxSeries::monomial(FieldElem(1), 1);
  const BiPoly qx = q.dx();
  PuiseuxSeries x;  // exact polynomial, correct modulo T^p
  std::int64_t p = 1;
  while (p < prec) {
    p = std::min(prec, 2 * p);
    const Rational cap(static_cast<long>(p));
    const PuiseuxSeries val = substitute(q, x, tser, cap);
    const PuiseuxSeries der = substitute(qx, x, tser, cap);
    const PuiseuxSeries next = (x - val * der.invert(p)).truncated(p);
    x = PuiseuxSeries::from_terms(next.terms(), 1);
  }
  return x.truncated(prec);
}

struct State {
  BiPoly q;
  std::int64_t m = 1;  // y = T^m
  std::int64_t a = 0;  // x = prefix + T^a X
  std::map<std::int64_t, FieldElem> prefix;
  std::vector<PuiseuxStep> prov;
};

void expand(const BiPoly& p, State st, int k, std::vector<Branch>& out) {
  auto emit = [&](const PuiseuxSeries& tail, bool exact, int mult) {
    PuiseuxSeries x = PuiseuxSeries::from_terms(st.prefix, 1) + tail.shifted(st.a);
    Branch br;
    // T-exponents over ramification m, so exponents read as powers of y
    br.x = PuiseuxSeries::from_terms(x.terms(), st.m, exact ? std::nullopt : x.trunc_num());
    br.m = static_cast<int>(st.m);
    br.exact = exact;
    br.multiplicity = mult;
    br.poly = p;
    br.provenance = st.prov;
    out.push_back(std::move(br));
  };

  const int r = st.q.x_valuation();
  if (r > 0) {
    emit(PuiseuxSeries(), true, r);
    st.q = st.q.shift_down(r, 0);
  }
  const int s = st.q.y_valuation();
  if (s > 0) st.q = st.q.shift_down(0, s);
  if (st.q.is_zero() || !st.q.coeff(0, 0).is_zero()) return;

  const std::int64_t target = static_cast<std::int64_t>(k) * st.m;
  if (!st.q.coeff(1, 0).is_zero()) {
    const std::int64_t prec = std::max<std::int64_t>(1, target - st.a);
    PuiseuxSeries root = regular_root(st.q, prec);
    // promote to exact when the finite part already solves Q
    const PuiseuxSeries candidate = PuiseuxSeries::from_terms(root.terms(), 1);
    const bool exact = substitute(st.q, candidate, PuiseuxSeries::monomial(FieldElem(1), 1)).is_identically_zero();
    emit(exact ? candidate : root, exact, 1);
    return;
  }
  if (st.a > target)
    fail(ErrorKind::PrecisionExceeded, "branches not separated below the exponent cap");

  for (const auto& seg : segments_of(st.q)) {
    // face(z) = psi(z^b)
    std::vector<FieldElem> psi;
    for (int i = 0; i <= seg.face.degree(); i += static_cast<int>(seg.b)) psi.push_back(seg.face.coeff(i));
    for (const auto& root : solve_face(UPoly(psi), static_cast<int>(seg.b))) {
      State next;
      std::int64_t shift = 0;
      next.q = blow_up(st.q, seg.a, seg.b, root.value, shift);
      next.m = st.m * seg.b;
      next.a = st.a * seg.b + seg.a;
      for (const auto& [e, c] : st.prefix) next.prefix.emplace(e * seg.b, c);
      next.prefix.emplace(next.a, root.value);
      next.prov = st.prov;
      next.prov.push_back({seg.slope, root.value});
      expand(p, std::move(next), k, out);
    }
  }
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& p) {
  NewtonPolygon np;
  for (const auto& [k, c] : p.terms()) np.points.push_back(k);
  np.segments = segments_of(p);
  return np;
}

Expansion expand_branches(const BiPoly& p, int k) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "cannot expand the zero polynomial");
  if (!p.coeff(0, 0).is_zero()) fail(ErrorKind::InvalidArgument, "polynomial does not vanish at the origin");
  Expansion ex;
  ex.vertical_multiplicity = p.y_valuation();
  State st;
  st.q = p;
  expand(p, std::move(st), k, ex.branches);
  return ex;
}

OrderValue verify_branch(const BiPoly& p, const Branch& b) {
  g_verify_count.fetch_add(1, std::memory_order_relaxed);
  return substitute(p, b.x, b.y()).order();
}

std::uint64_t verify_branch_count() { return g_verify_count.load(std::memory_order_relaxed); }

std::vector<PuiseuxSeries> conjugates(const Branch& b) {
  std::vector<PuiseuxSeries> out;
  for (int s = 0; s < b.m; ++s) {
    out.push_back(b.x.map_coefficients([&](std::int64_t e, const FieldElem& c) {
      if (s == 0) return c;
      const std::int64_t ram = b.x.ramification();
      // t-exponent e/ram * m
      const std::int64_t te = e * b.m / ram;
      return c * FieldElem::root_of_unity(b.m, (s * te) % b.m);
    }));
  }
  return out;
}

}  // namespace lipsat
