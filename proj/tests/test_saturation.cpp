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

#include <chrono>

#include "lipsat/errors.hpp"
#include "lipsat/saturation.hpp"
#include "pair_generators.hpp"

namespace lipsat {
namespace {

FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }
BiPoly mono(const FieldElem& c, int i, int j) { return BiPoly::monomial(c, i, j); }
PuiseuxSeries smono(const FieldElem& c, std::int64_t e, std::int64_t m = 1) { return PuiseuxSeries::monomial(c, e, m); }
Rational r(long n, long d = 1) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

BiPoly cubic_seven() { return mono(q(1, 3), 3, 0) - mono(q(1), 0, 7) - mono(q(1), 1, 5); }
BiPoly hp_family() {
  const FieldElem t = FieldElem::parameter("t");
  return mono(q(1), 3, 0) - mono(q(3) * t * t, 1, 4) + mono(q(1), 0, 6);
}
BiPoly brieskorn(int p, int qq) { return mono(q(1), p, 0) + mono(q(1), 0, qq); }

using testing::curve_pair;

PairCurve first_polar_pair(const BiPoly& f, const PolarDirection& d, int k = 32) {
  const auto pc = polar_pairs(f, d, k);
  EXPECT_FALSE(pc.pairs.empty());
  return pc.pairs.at(0);
}

TEST(Saturation, CuspModuleAndDeterminant) {
  const BiPoly f = cubic_seven();
  const PairCurve p = first_polar_pair(f, x_direction());
  const PulledBackModule m = pair_module(f, p);
  ASSERT_EQ(m.generators.size(), 4u);
  EXPECT_TRUE(m.generators[0].c1.is_identically_zero());
  EXPECT_TRUE(m.generators[0].c2.is_identically_zero());
  EXPECT_EQ(m.generators[1].c1.to_string("y"), "-7*y^6 - 5*y^(13/2)");
  EXPECT_EQ(m.generators[1].c2.to_string("y"), "-7*y^6 + 5*y^(13/2)");
  EXPECT_EQ(m.delta.to_string("y"), "2*y^(5/2)");
  const PuiseuxSeries D = det_D(f, f, p);
  EXPECT_EQ(D, smono(q(-2, 3), 27, 2));
  EXPECT_TRUE(det_D(f.dy(), f, p).is_identically_zero());
}

TEST(Saturation, CuspFails) {
  const BiPoly f = cubic_seven();
  const PairCurve p = first_polar_pair(f, x_direction());
  const Verdict v = module_membership(doubled(f, p), pair_module(f, p), 32);
  EXPECT_EQ(v.outcome, Outcome::Fail);
  EXPECT_EQ(v.lhs, OrderValue::exact(r(15, 2)));
  EXPECT_EQ(v.threshold, OrderValue::exact(r(17, 2)));
  const PairReport rep = check_pair(f, f, p, x_direction(), 32);
  EXPECT_EQ(rep.verdict.outcome, Outcome::Fail);
  for (const auto& s : rep.shortcuts)
    if (s.criterion != Criterion::RegularQuotient) {
      EXPECT_FALSE(s.applied) << to_string(s.criterion);
    }
  // ord D - e1 - e2 = 27/2 - 12 = 3/2 < C
  EXPECT_TRUE(rep.shortcuts[2].applied);
  EXPECT_EQ(rep.shortcuts[2].outcome, Outcome::Fail);
  // generators are members
  EXPECT_EQ(module_membership(doubled(f.dy(), p), pair_module(f, p), 32).outcome, Outcome::Pass);
}

TEST(Saturation, CuspSaturationPolar) {
  const BiPoly f = cubic_seven();
  const auto start = std::chrono::steady_clock::now();
  const SaturationReport rep = check_saturation_polar(f, f, default_directions(f), PrecisionPolicy{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  EXPECT_EQ(rep.outcome, Aggregate::Fail);
  ASSERT_TRUE(rep.witness.has_value());
  const PairReport& w = rep.directions[rep.witness->first].pairs[rep.witness->second];
  EXPECT_EQ(w.pair.describe(), "((t^5, t^2), (-t^5, t^2))");
  EXPECT_EQ(t_order_string(w.verdict.lhs, w.pair.t_scale), "15/1");
  EXPECT_EQ(t_order_string(w.verdict.threshold, w.pair.t_scale), "17/1");
}

TEST(Saturation, FamilyFails) {
  const BiPoly F = hp_family();
  const auto start = std::chrono::steady_clock::now();
  const auto reps = check_family(F, {"t"}, PrecisionPolicy{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  ASSERT_EQ(reps.size(), 1u);
  const SaturationReport& rep = reps[0].report;
  EXPECT_EQ(rep.outcome, Aggregate::Fail);
  ASSERT_TRUE(rep.witness.has_value());
  const PairReport& w = rep.directions[rep.witness->first].pairs[rep.witness->second];
  EXPECT_EQ(w.verdict.lhs, OrderValue::exact(r(6)));
  EXPECT_EQ(w.verdict.threshold, OrderValue::exact(r(7)));
  const FieldElem t = FieldElem::parameter("t");
  const PuiseuxSeries D = det_D(F.dparam(*SymbolTable::instance().find("t")), F, w.pair);
  EXPECT_EQ(D, smono(FieldElem(q(-72) * t * t), 11));
}

TEST(Saturation, BrieskornShortcuts) {
  const BiPoly f = brieskorn(3, 4);
  const PolarDirection d = generic_direction(f);
  const PairCurve p = first_polar_pair(f, d);
  const PairReport fail = check_pair(mono(q(1), 1, 2), f, p, d, 32);
  EXPECT_EQ(fail.verdict.outcome, Outcome::Fail);
  EXPECT_EQ(fail.det_order, OrderValue::exact(r(13, 2)));
  EXPECT_TRUE(fail.shortcuts[1].applied);
  EXPECT_EQ(fail.shortcuts[1].outcome, Outcome::Fail);
  const PairReport pass = check_pair(mono(q(1), 1, 3), f, p, d, 32);
  EXPECT_EQ(pass.verdict.outcome, Outcome::Pass);
  EXPECT_TRUE(pass.shortcuts[1].applied);
  const PairReport y4 = check_pair(mono(q(1), 0, 4), f, p, d, 32);
  EXPECT_EQ(y4.verdict.outcome, Outcome::Pass);
  EXPECT_TRUE(y4.shortcuts[0].applied);
}

TEST(Saturation, PolarAggregates) {
  const BiPoly f = brieskorn(3, 4);
  const PrecisionPolicy pol{};
  EXPECT_EQ(check_saturation_polar(f, mono(q(1), 1, 3), default_directions(f), pol).outcome, Aggregate::PassPolar);
  EXPECT_EQ(check_saturation_polar(f, mono(q(1), 0, 4), default_directions(f), pol).outcome, Aggregate::PassPolar);
  EXPECT_EQ(check_saturation_polar(f, mono(q(1), 1, 2), default_directions(f), pol).outcome, Aggregate::Fail);
  const FieldElem t = FieldElem::parameter("t");
  const BiPoly F = f + mono(t, 1, 3);
  const auto fam = check_family(F, {"t"}, PrecisionPolicy{});
  EXPECT_EQ(fam[0].report.outcome, Aggregate::PassPolar);
  const auto zero = check_family(cubic_seven(), {"t"}, PrecisionPolicy{});
  EXPECT_EQ(zero[0].report.outcome, Aggregate::PassPolar);
}

TEST(Saturation, FiberPairs) {
  const BiPoly f = brieskorn(3, 4);
  const FieldElem z4 = FieldElem::root_of_unity(4, 1);
  const PairCurve p = curve_pair(smono(q(1), 4), smono(q(1), 3), smono(q(1), 4), smono(z4, 3));
  EXPECT_EQ(check_fiber_pair(f, p, f, 32).outcome, Outcome::Pass);
  EXPECT_EQ(verify_fiber_pair_membership(f, p, 32).outcome, Outcome::Pass);
  const PairCurve bad = curve_pair(smono(q(1), 4), smono(q(1), 3), smono(q(1), 4), smono(q(2), 3));
  EXPECT_THROW(check_fiber_pair(f, bad, f, 32), Error);
  const BiPoly g = cubic_seven();
  EXPECT_THROW(check_fiber_pair(g, first_polar_pair(g, x_direction()), g, 32), Error);
  // zero fiber: both curves on f = 0
  const BiPoly cusp = mono(q(1), 2, 0) - mono(q(1), 0, 3);
  const PairCurve z = curve_pair(smono(q(1), 3), smono(q(1), 2), smono(q(-1), 3), smono(q(1), 2));
  EXPECT_EQ(verify_fiber_pair_membership(cusp, z, 32).outcome, Outcome::Pass);
}

TEST(Saturation, TauDerivativeExamples) {
  const BiPoly f = cubic_seven();
  EXPECT_EQ(verify_tau_derivative_membership(f, first_polar_pair(f, x_direction()), 32).outcome, Outcome::Pass);
  const PairCurve diag = curve_pair(smono(q(1), 3), smono(q(1), 2), smono(q(1), 3), smono(q(1), 2));
  EXPECT_EQ(verify_tau_derivative_membership(f, diag, 32).outcome, Outcome::Pass);
}

TEST(Saturation, TauDerivativeRandom) {
  const auto cases = testing::curve_pair_cases(2025, 6, 10);
  ASSERT_GE(cases.size(), 50u);
  for (const auto& c : cases)
    EXPECT_EQ(verify_tau_derivative_membership(c.f, c.pair, 64).outcome, Outcome::Pass) << c.f.to_string("x", "y") << " " << c.pair.describe();
}

TEST(Saturation, FiberPairMembership) {
  const auto cases = testing::fiber_cases(7, 9);
  ASSERT_GE(cases.size(), 50u);
  for (const auto& c : cases)
    EXPECT_EQ(verify_fiber_pair_membership(c.f, c.pair, 64).outcome, Outcome::Pass) << c.f.to_string("x", "y") << " " << c.pair.describe();
}

TEST(Saturation, CoherenceAndDeterminantRestatement) {
  const std::vector<BiPoly> corpus{cubic_seven(), brieskorn(3, 4), brieskorn(4, 5),
                                   mono(q(1), 3, 0) + mono(q(1), 1, 5) + mono(q(2), 0, 7)};
  int restated = 0;
  for (const auto& f : corpus) {
    for (const auto& d : default_directions(f)) {
      const auto pc = polar_pairs(f, d, 24);
      for (const auto& p : pc.pairs) {
        for (int i = 0; i <= 4; ++i)
          for (int j = 0; i + j <= 6; ++j) {
            const BiPoly g = mono(q(1), i, j);
            const PairReport rep = check_pair(g, f, p, d, 24);  // throws on a shortcut mismatch
            const auto& geo = rep.geometry;
            if (!d.has_fx() || !rep.i1.is_exact() || !rep.i2.is_exact() || !geo.e1.is_exact() || !geo.e2.is_exact())
              continue;
            if (rep.i1.value < geo.e1.value || rep.i2.value < geo.e2.value) continue;
            if (!rep.det_order.is_exact() && !rep.det_order.is_infinite()) continue;
            const bool pass = rep.det_order.is_infinite() ||
                              rep.det_order.value >= geo.e1.value + geo.e2.value + geo.contact.value;
            EXPECT_EQ(rep.verdict.outcome, pass ? Outcome::Pass : Outcome::Fail);
            ++restated;
          }
      }
    }
  }
  EXPECT_GT(restated, 20);
}

TEST(Saturation, ScaleInvariance) {
  const BiPoly f = brieskorn(3, 4);
  const PolarDirection d = generic_direction(f);
  const PairCurve p = first_polar_pair(f, d);
  for (const auto& g : {mono(q(1), 1, 2), mono(q(1), 1, 3), mono(q(1), 2, 1)}) {
    const Verdict a = check_pair(g, f, p, d, 32).verdict;
    const Verdict b = check_pair(g * BiPoly(q(-7, 2)), f * BiPoly(q(5)), p, d, 32).verdict;
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.threshold, b.threshold);
  }
}

TEST(Saturation, IdealMembersPass) {
  const BiPoly f = mono(q(1), 3, 0) + mono(q(1), 1, 5) + mono(q(2), 0, 7);
  const BiPoly g = f.dx() * (mono(q(1), 0, 1) + mono(q(3), 1, 1)) + f.dy() * mono(q(-2), 2, 0);
  const auto rep = check_saturation_polar(f, g, default_directions(f), PrecisionPolicy{});
  EXPECT_EQ(rep.outcome, Aggregate::PassPolar);
}

}  // namespace
}  // namespace lipsat
