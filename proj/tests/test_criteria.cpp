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

#include <numeric>

#include "lipsat/criteria.hpp"
#include "lipsat/errors.hpp"

namespace lipsat {
namespace {

TEST(Criteria, MonomialExamples) {
  EXPECT_TRUE(lipsat_monomial(3, 4, 1, 3));
  EXPECT_FALSE(lipsat_monomial(3, 4, 1, 2));
  EXPECT_TRUE(lipsat_monomial(3, 4, 0, 4));
  EXPECT_TRUE(fr_monomial(3, 4, 1, 3));
  EXPECT_FALSE(fr_monomial(3, 4, 3, 0));
  EXPECT_FALSE(fr_monomial(3, 4, 0, 4));
  EXPECT_THROW(lipsat_monomial(3, 5, 1, 1), Error);
}

TEST(Criteria, WedgeExamples) {
  const auto rows = wedge_table(3, 4, 8);
  auto find = [&](int i, int j) {
    for (const auto& r : rows)
      if (r.i == i && r.j == j) return r;
    ADD_FAILURE() << i << "," << j;
    return MonomialVerdictRow{};
  };
  EXPECT_TRUE(find(3, 0).wedge);
  EXPECT_FALSE(find(1, 3).wedge);
  EXPECT_TRUE(find(1, 3).lipsat_inequality && find(1, 3).fr_inequality);
  EXPECT_FALSE(find(1, 2).wedge);
  EXPECT_FALSE(find(1, 2).lipsat_inequality || find(1, 2).fr_inequality);
  EXPECT_EQ(rows.size(), 45u);
}

TEST(Criteria, AxisBounds) {
  EXPECT_EQ(fr_axis_bound(3, 4), Rational(13, 4));
  EXPECT_EQ(fr_axis_bound_prose(3, 4), Rational(10, 3));
}

class Grid : public ::testing::TestWithParam<std::pair<int, int>> {};

std::vector<std::pair<int, int>> grid() {
  std::vector<std::pair<int, int>> g;
  for (int p = 2; p <= 9; ++p)
    for (int q = p + 1; q <= 9; ++q)
      if (std::gcd(p - 1, q - 1) == 1) g.emplace_back(p, q);
  return g;
}

TEST_P(Grid, SameThresholdAtIEqualsOne) {
  const auto [p, q] = GetParam();
  for (int j = 0; j <= 3 * q; ++j) {
    EXPECT_EQ(lipsat_monomial(p, q, 1, j), j >= q - 1) << p << "," << q << " j=" << j;
    EXPECT_EQ(fr_monomial(p, q, 1, j), j >= q - 1) << p << "," << q << " j=" << j;
  }
}

TEST_P(Grid, FrImpliesLipsat) {
  const auto [p, q] = GetParam();
  for (int i = 1; i <= 3 * q; ++i)
    for (int j = 0; j <= 3 * q; ++j)
      if (fr_monomial(p, q, i, j)) {
        EXPECT_TRUE(lipsat_monomial(p, q, i, j)) << p << "," << q << " " << i << "," << j;
      }
}

INSTANTIATE_TEST_SUITE_P(Weights, Grid, ::testing::ValuesIn(grid()));

TEST(Criteria, EngineAgreesOnWedge34) {
  const auto rows = wedge_table(3, 4, 8, true);
  int verified = 0;
  for (const auto& r : rows) {
    if (!r.verifiable) {
      EXPECT_FALSE(r.engine_verdict.has_value());
      continue;
    }
    ASSERT_TRUE(r.engine_verdict.has_value());
    EXPECT_EQ(*r.engine_verdict, r.lipsat_inequality ? Aggregate::PassPolar : Aggregate::Fail) << r.i << "," << r.j;
    ++verified;
  }
  EXPECT_GT(verified, 10);
}

}  // namespace
}  // namespace lipsat
