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
#include <set>

#include "lipsat/errors.hpp"
#include "lipsat/puiseux.hpp"

namespace lipsat {
namespace {

FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }
BiPoly mono(const FieldElem& c, int i, int j) { return BiPoly::monomial(c, i, j); }
PuiseuxSeries smono(const FieldElem& c, std::int64_t e, std::int64_t m) { return PuiseuxSeries::monomial(c, e, m); }

bool valid(const BiPoly& p, const Branch& b, int k) {
  const OrderValue o = verify_branch(p, b);
  if (o.is_infinite()) return true;
  return o.kind == OrderValue::Kind::AtLeast && o.value >= k;
}

TEST(NewtonPolygon, Segments) {
  const auto np = newton_polygon(mono(q(1), 2, 0) - mono(q(1), 0, 5));
  ASSERT_EQ(np.segments.size(), 1u);
  EXPECT_EQ(np.segments[0].slope, Rational(5, 2));
  EXPECT_EQ(np.segments[0].face, UPoly({q(-1), q(0), q(1)}));
  const FieldElem t = FieldElem::parameter("t");
  const auto np2 = newton_polygon(mono(q(3), 2, 0) - mono(q(3) * t * t, 0, 4));
  ASSERT_EQ(np2.segments.size(), 1u);
  EXPECT_EQ(np2.segments[0].slope, Rational(2));
  EXPECT_EQ(np2.segments[0].face, UPoly({q(-3) * t * t, q(0), q(3)}));
  // two slopes, increasing order
  const BiPoly two = (mono(q(1), 1, 0) - mono(q(1), 0, 1)) * (mono(q(1), 1, 0) - mono(q(1), 0, 3));
  const auto np3 = newton_polygon(two);
  ASSERT_EQ(np3.segments.size(), 2u);
  EXPECT_EQ(np3.segments[0].slope, Rational(1));
  EXPECT_EQ(np3.segments[1].slope, Rational(3));
}

TEST(Expand, CuspPolar) {
  const BiPoly p = mono(q(1), 2, 0) - mono(q(1), 0, 5);
  const Expansion ex = expand_branches(p, 40);
  ASSERT_EQ(ex.branches.size(), 1u);
  const Branch& b = ex.branches[0];
  EXPECT_EQ(b.m, 2);
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.x, smono(q(1), 5, 2));
  EXPECT_TRUE(verify_branch(p, b).is_infinite());
  const auto sheets = conjugates(b);
  ASSERT_EQ(sheets.size(), 2u);
  EXPECT_EQ(sheets[1], smono(q(-1), 5, 2));
}

TEST(Expand, ParameterFamilyPolar) {
  const FieldElem t = FieldElem::parameter("t");
  const BiPoly p = mono(q(3), 2, 0) - mono(q(3) * t * t, 0, 4);
  const Expansion ex = expand_branches(p, 40);
  ASSERT_EQ(ex.branches.size(), 2u);
  std::set<std::string> xs;
  for (const auto& b : ex.branches) {
    EXPECT_EQ(b.m, 1);
    EXPECT_TRUE(verify_branch(p, b).is_infinite());
    xs.insert(b.x.to_string());
  }
  EXPECT_EQ(xs, (std::set<std::string>{smono(t, 2, 1).to_string(), smono(-t, 2, 1).to_string()}));
}

TEST(Expand, RadicalLeadingCoefficient) {
  const FieldElem c = FieldElem::parameter("c");
  const BiPoly p = mono(q(3), 2, 0) - mono(q(4) * c, 0, 3);
  const Expansion ex = expand_branches(p, 40);
  ASSERT_EQ(ex.branches.size(), 1u);
  const Branch& b = ex.branches[0];
  EXPECT_EQ(b.m, 2);
  ASSERT_EQ(b.x.terms().size(), 1u);
  EXPECT_EQ(b.x.terms().begin()->first, 3);
  const FieldElem gamma = b.x.terms().begin()->second;
  EXPECT_EQ(gamma * gamma, q(4, 3) * c);
  EXPECT_TRUE(gamma.has_radicals());
  const auto sheets = conjugates(b);
  EXPECT_EQ(sheets[1], smono(-gamma, 3, 2));
}

TEST(Expand, SmoothAndVertical) {
  const Expansion ex = expand_branches(BiPoly::x(), 10);
  ASSERT_EQ(ex.branches.size(), 1u);
  EXPECT_TRUE(ex.branches[0].x.is_identically_zero());
  const Expansion v = expand_branches(BiPoly::y() * (BiPoly::x() - mono(q(1), 0, 2)), 10);
  EXPECT_EQ(v.vertical_multiplicity, 1);
  ASSERT_EQ(v.branches.size(), 1u);
  EXPECT_EQ(v.branches[0].x, smono(q(1), 2, 1));
}

TEST(Expand, NewtonIterationOnRegularLevel) {
  // x + x^2 - y: infinite series root
  const BiPoly p = BiPoly::x() + mono(q(1), 2, 0) - BiPoly::y();
  const int k = 12;
  const Expansion ex = expand_branches(p, k);
  ASSERT_EQ(ex.branches.size(), 1u);
  const Branch& b = ex.branches[0];
  EXPECT_FALSE(b.exact);
  EXPECT_TRUE(valid(p, b, k));
  // Catalan numbers with alternating sign: x = y - y^2 + 2y^3 - 5y^4 + ...
  EXPECT_EQ(b.x.coeff(1), q(1));
  EXPECT_EQ(b.x.coeff(2), q(-1));
  EXPECT_EQ(b.x.coeff(3), q(2));
  EXPECT_EQ(b.x.coeff(4), q(-5));
}

TEST(Expand, CorruptedBranchIsDetected) {
  const BiPoly p = mono(q(1), 2, 0) - mono(q(1), 0, 5);
  Branch b = expand_branches(p, 40).branches[0];
  b.x = smono(q(2), 5, 2);
  const OrderValue o = verify_branch(p, b);
  EXPECT_TRUE(o.is_exact());
  EXPECT_EQ(o.value, Rational(5));
}

TEST(Expand, UnsupportedFace) {
  // face z^3 + z + 1 has no rational root and is not binomial
  const BiPoly p = mono(q(1), 3, 0) + mono(q(1), 1, 2) + mono(q(1), 0, 3);
  try {
    (void)expand_branches(p, 10);
    ADD_FAILURE() << "expected UnsupportedExtension";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedExtension);
  }
}

// Corpus used for the structural properties.
std::vector<BiPoly> corpus() {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  const FieldElem c = FieldElem::parameter("c");
  std::vector<BiPoly> out;
  out.push_back(x.pow(2) - y.pow(5));
  out.push_back((x.pow(2) - y.pow(3)) * (x.pow(2) - y.pow(5)));
  out.push_back(mono(q(3), 2, 0) - mono(q(4) * c, 0, 3));
  out.push_back(x.pow(3) - y.pow(7) + mono(q(2), 1, 5));
  out.push_back((x - y.pow(2)) * (x + y.pow(2)) * (x - y.pow(3)));
  out.push_back(x.pow(2) - mono(q(2), 1, 2) + y.pow(4) - y.pow(5));
  out.push_back(x + x.pow(2) - y);
  out.push_back(x.pow(4) - y.pow(6) + y.pow(7));
  out.push_back(mono(q(5), 4, 0) - mono(q(3), 0, 2) * c);
  out.push_back((x.pow(2) - y.pow(3)).pow(1) * (x - y) + y.pow(7));
  return out;
}

TEST(ExpandProperties, ResidualMeetsPrecision) {
  const int k = 20;
  for (const auto& p : corpus()) {
    for (const auto& b : expand_branches(p, k).branches) EXPECT_TRUE(valid(p, b, k)) << p.to_string();
  }
}

TEST(ExpandProperties, MultiplicityAccounting) {
  for (const auto& p : corpus()) {
    const Expansion ex = expand_branches(p, 12);
    int total = 0;
    for (const auto& b : ex.branches) total += b.m * b.multiplicity;
    const BiPoly regular = p.shift_down(0, ex.vertical_multiplicity);
    // x-degree of the y-regular part equals the order of regular(x, 0) in x
    int order_x = -1;
    for (const auto& [key, c] : regular.terms())
      if (key.second == 0 && (order_x < 0 || key.first < order_x)) order_x = key.first;
    EXPECT_EQ(total, order_x) << p.to_string();
  }
}

TEST(ExpandProperties, ConjugatesAreValidAndDistinct) {
  const int k = 16;
  for (const auto& p : corpus()) {
    std::vector<PuiseuxSeries> all;
    std::vector<int> rams;
    for (const auto& b : expand_branches(p, k).branches) {
      for (const auto& s : conjugates(b)) {
        Branch sheet = b;
        sheet.x = s;
        EXPECT_TRUE(valid(p, sheet, k)) << p.to_string();
        all.push_back(s);
      }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]) << p.to_string();
  }
}

TEST(ExpandProperties, ConjugateClosure) {
  for (const auto& p : corpus()) {
    for (const auto& b : expand_branches(p, 12).branches) {
      const auto sheets = conjugates(b);
      std::set<std::string> base;
      for (const auto& s : sheets) base.insert(s.to_string());
      for (const auto& s : sheets) {
        Branch moved = b;
        moved.x = s;
        std::set<std::string> again;
        for (const auto& t : conjugates(moved)) again.insert(t.to_string());
        EXPECT_EQ(base, again);
      }
    }
  }
}

TEST(ExpandProperties, DeterministicOrder) {
  for (const auto& p : corpus()) {
    const auto a = expand_branches(p, 12).branches;
    const auto b = expand_branches(p, 12).branches;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].x.to_string(), b[i].x.to_string());
  }
}

}  // namespace
}  // namespace lipsat
