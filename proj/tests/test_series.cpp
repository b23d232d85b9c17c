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

#include <gtest/gtest.h>

#include <random>

#include "lipsat/errors.hpp"
#include "lipsat/series.hpp"

namespace lipsat {
namespace {

FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }
PuiseuxSeries mono(const FieldElem& c, std::int64_t e, std::int64_t m = 1) { return PuiseuxSeries::monomial(c, e, m); }
Rational r(long n, long d = 1) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

// (1/3)x^3 - y^7 - x*y^5
BiPoly example_f() {
  return BiPoly::monomial(q(1, 3), 3, 0) - BiPoly::monomial(q(1), 0, 7) - BiPoly::monomial(q(1), 1, 5);
}

TEST(Order, ExactBoundAndZero) {
  const PuiseuxSeries s = mono(q(-1), 14) + mono(q(-2, 3), 15);
  EXPECT_EQ(s.order(), OrderValue::exact(14));
  EXPECT_EQ(PuiseuxSeries::big_o(40).order(), OrderValue::at_least(40));
  EXPECT_TRUE(PuiseuxSeries().order().is_infinite());
  const FieldElem t = FieldElem::parameter("t");
  const PuiseuxSeries y5 = mono(q(6) * (q(1) - q(2) * t.pow(3)), 5);
  EXPECT_EQ(y5.order(), OrderValue::exact(5));
}

TEST(Arith, ExamplesFromTheText) {
  EXPECT_EQ(mono(q(1), 5) - mono(q(-1), 5), mono(q(2), 5));
  const FieldElem t = FieldElem::parameter("t");
  const PuiseuxSeries a = PuiseuxSeries(q(1)) - PuiseuxSeries(q(2) * t.pow(3));
  const PuiseuxSeries b = PuiseuxSeries(q(1)) + PuiseuxSeries(q(2) * t.pow(3));
  EXPECT_EQ(a * b, PuiseuxSeries(q(1) - q(4) * t.pow(6)));
  const PuiseuxSeries s = mono(q(3), 1) + PuiseuxSeries::big_o(10);
  const PuiseuxSeries z = PuiseuxSeries::big_o(4);
  EXPECT_EQ((s + z).trunc_num(), 4);
}

TEST(Arith, TruncationPropagation) {
  const PuiseuxSeries a = mono(q(1), 2) + PuiseuxSeries::big_o(10);
  const PuiseuxSeries b = mono(q(1), 3) + PuiseuxSeries::big_o(7);
  const PuiseuxSeries p = a * b;
  EXPECT_EQ(p.trunc_num(), std::min<std::int64_t>(10 + 3, 7 + 2));
  EXPECT_EQ(p.order(), OrderValue::exact(5));
  const PuiseuxSeries c = mono(q(1), 1, 2) + PuiseuxSeries::big_o(5, 2);
  const PuiseuxSeries d = mono(q(1), 1, 3);
  const PuiseuxSeries e = c * d;
  EXPECT_EQ(e.ramification(), 6);
  EXPECT_EQ(e.order(), OrderValue::exact(r(5, 6)));
  EXPECT_EQ(e.trunc(), r(5, 2) + r(1, 3));
}

TEST(InvertUnit, GeometricSeries) {
  const PuiseuxSeries s = PuiseuxSeries(q(1)) - mono(q(5, 7), 1);
  const PuiseuxSeries inv = s.invert(6);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(inv.coeff(k), q(5, 7).pow(k));
  EXPECT_EQ(inv.trunc_num(), 6);
  EXPECT_EQ(mono(q(1), 2).invert(10), mono(q(1), -2) + PuiseuxSeries::big_o(10));
  const FieldElem t = FieldElem::parameter("t");
  const FieldElem u = q(1) + q(2) * t.pow(3);
  const PuiseuxSeries v = mono(q(6) * u, 5).invert(3);
  EXPECT_EQ(v.coeff(-5), q(1, 6) / u);
  EXPECT_THROW((void)PuiseuxSeries::big_o(3).invert(5), Error);
}

TEST(InvertUnit, RoundTripOnInexactInput) {
  const PuiseuxSeries s = mono(q(2), 3) + mono(q(1), 4) - mono(q(3), 6) + PuiseuxSeries::big_o(12);
  const PuiseuxSeries inv = s.invert(20);
  EXPECT_EQ(inv.trunc_num(), 12 - 6);
  const PuiseuxSeries one = s * inv;
  EXPECT_EQ(one.coeff(0), q(1));
  for (const auto& [e, c] : one.terms()) EXPECT_EQ(e, 0);
  EXPECT_GE(*one.trunc_num(), 6);
}

TEST(Substitute, ExampleCompositions) {
  const BiPoly f = example_f();
  const PuiseuxSeries x = mono(q(1), 5), y = mono(q(1), 2);
  EXPECT_EQ(substitute(f, x, y), mono(q(-1), 14) + mono(q(-2, 3), 15));
  const BiPoly fy = f.dy();
  EXPECT_EQ(fy, BiPoly::monomial(q(-7), 0, 6) - BiPoly::monomial(q(5), 1, 4));
  EXPECT_EQ(substitute(fy, mono(q(-1), 5), y), mono(q(-7), 12) + mono(q(5), 13));
  const BiPoly g = BiPoly(q(4)) + BiPoly::x() * BiPoly::y();
  EXPECT_EQ(substitute(g, PuiseuxSeries(), PuiseuxSeries()), PuiseuxSeries(q(4)));
}

TEST(Derivative, TauTimesDerivative) {
  const PuiseuxSeries s = mono(q(-1), 14) + mono(q(-2, 3), 15);
  EXPECT_EQ(s.tau_derivative(), mono(q(-14), 14) + mono(q(-10), 15));
  EXPECT_TRUE(PuiseuxSeries(q(7)).tau_derivative().is_identically_zero());
  const PuiseuxSeries h = mono(q(2), 3, 2);
  EXPECT_EQ(h.tau_derivative(), mono(q(3), 3, 2));
}

TEST(Ramification, CommonRamification) {
  PuiseuxSeries a = mono(q(1), 1, 2), b = mono(q(1), 3);
  unify(a, b);
  EXPECT_EQ(a.ramification(), 2);
  EXPECT_EQ(b.ramification(), 2);
  EXPECT_EQ(b.terms().begin()->first, 6);
  PuiseuxSeries c = mono(q(1), 1, 2), d = mono(q(1), 1, 3);
  const auto oc = c.order(), od = d.order();
  unify(c, d);
  EXPECT_EQ(c.ramification(), 6);
  EXPECT_EQ(c.order(), oc);
  EXPECT_EQ(d.order(), od);
  EXPECT_EQ(mono(q(1), 4, 2).minimized().ramification(), 1);
}

TEST(Order, GeqDecisions) {
  EXPECT_EQ(order_geq(OrderValue::exact(3), OrderValue::exact(2)), true);
  EXPECT_EQ(order_geq(OrderValue::exact(1), OrderValue::at_least(2)), false);
  EXPECT_FALSE(order_geq(OrderValue::exact(3), OrderValue::at_least(2)).has_value());
  EXPECT_EQ(order_geq(OrderValue::at_least(5), OrderValue::exact(2)), true);
  EXPECT_EQ(order_geq(OrderValue::infinite(), OrderValue::exact(2)), true);
  EXPECT_EQ(order_geq(OrderValue::exact(2), OrderValue::infinite()), false);
  EXPECT_THROW((void)require_geq(OrderValue::at_least(1), OrderValue::exact(2)), Error);
}

class RandomSeries {
 public:
  explicit RandomSeries(std::uint32_t seed) : rng_(seed) {}

  PuiseuxSeries series(bool exact_order) {
    std::uniform_int_distribution<int> ram(1, 3), len(1, 4), exp(0, 9), coef(-5, 5), cut(0, 1);
    const int m = ram(rng_);
    PuiseuxSeries s;
    for (int k = len(rng_); k > 0; --k) {
      int c = coef(rng_);
      if (c == 0) c = 1;
      s = s + mono(q(c), exp(rng_) + (exact_order ? 1 : 0), m);
    }
    if (s.terms().empty()) s = mono(q(1), 1, m);
    if (cut(rng_)) s = s + PuiseuxSeries::big_o(40, m);
    return s;
  }

  BiPoly poly() {
    std::uniform_int_distribution<int> len(1, 4), deg(0, 3), coef(-4, 4);
    BiPoly p;
    for (int k = len(rng_); k > 0; --k) p.add_term(deg(rng_), deg(rng_), q(coef(rng_)));
    return p;
  }

 private:
  std::mt19937 rng_;
};

TEST(SeriesProperties, OrderIsAdditive) {
  RandomSeries g(3);
  for (int i = 0; i < 200; ++i) {
    const PuiseuxSeries a = g.series(false), b = g.series(false);
    if (!a.order().is_exact() || !b.order().is_exact()) continue;
    const auto p = (a * b).order();
    ASSERT_TRUE(p.is_exact());
    EXPECT_EQ(p.value, a.order().value + b.order().value);
  }
}

TEST(SeriesProperties, SubstituteIsRingHomomorphism) {
  RandomSeries g(8);
  for (int i = 0; i < 60; ++i) {
    const BiPoly p = g.poly(), r2 = g.poly();
    const PuiseuxSeries x = g.series(true), y = g.series(true);
    const Rational cap(12);
    const auto lhs_mul = substitute(p * r2, x, y).truncated_at(cap);
    const auto rhs_mul = (substitute(p, x, y) * substitute(r2, x, y)).truncated_at(cap);
    const auto lhs_add = substitute(p + r2, x, y).truncated_at(cap);
    const auto rhs_add = (substitute(p, x, y) + substitute(r2, x, y)).truncated_at(cap);
    const Rational common = std::min({*lhs_mul.trunc(), *rhs_mul.trunc()});
    EXPECT_EQ(lhs_mul.truncated_at(common), rhs_mul.truncated_at(common));
    const Rational common_add = std::min({*lhs_add.trunc(), *rhs_add.trunc()});
    EXPECT_EQ(lhs_add.truncated_at(common_add), rhs_add.truncated_at(common_add));
  }
}

TEST(SeriesProperties, TauDerivativePreservesOrderOfDifferences) {
  RandomSeries g(21);
  for (int i = 0; i < 200; ++i) {
    const PuiseuxSeries a = g.series(true), b = g.series(true);
    const PuiseuxSeries d = a - b;
    if (d.order().is_infinite() || !d.order().is_exact()) continue;
    EXPECT_EQ(d.tau_derivative().order(), d.order());
  }
}

TEST(SeriesProperties, InvertRoundTrip) {
  RandomSeries g(34);
  for (int i = 0; i < 200; ++i) {
    const PuiseuxSeries s = g.series(false);
    if (!s.order().is_exact()) continue;
    const PuiseuxSeries inv = s.invert(30 * s.ramification());
    const PuiseuxSeries one = s * inv;
    ASSERT_TRUE(one.trunc().has_value());
    EXPECT_EQ(one.minimized().terms().size(), 1u);
    EXPECT_EQ(one.coeff(0), q(1));
    EXPECT_GE(*one.trunc(), Rational(*inv.trunc() + s.order().value));
  }
}

}  // namespace
}  // namespace lipsat
