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

#pragma once

#include <random>
#include <vector>

#include "lipsat/saturation.hpp"

namespace lipsat::testing {

inline PairCurve curve_pair(PuiseuxSeries x1, PuiseuxSeries y1, PuiseuxSeries x2, PuiseuxSeries y2) {
  PairCurve p;
  p.x1 = std::move(x1);
  p.y1 = std::move(y1);
  p.x2 = std::move(x2);
  p.y2 = std::move(y2);
  return p;
}

/// Polynomial curve germ with 1..4 terms starting at order 1..3.
inline PuiseuxSeries random_curve(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), start(1, 3);
  std::map<std::int64_t, FieldElem> terms;
  const int s = start(rng);
  terms.emplace(s, FieldElem(Rational(coef(rng) | 1)));
  for (int e = s + 1; e <= s + 3; ++e) {
    const int c = coef(rng);
    if (c != 0) terms.emplace(e, FieldElem(Rational(c)));
  }
  return PuiseuxSeries::from_terms(terms, 1);
}

/// Random germ of order >= 2 and degree <= 5 with small integer coefficients.
inline BiPoly random_germ(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  BiPoly f;
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j)
      if (i + j >= 2) {
        const int c = coef(rng);
        if (c != 0 && rng() % 2 == 0) f += BiPoly::monomial(FieldElem(Rational(c)), i, j);
      }
  if (f.is_zero()) f = BiPoly::monomial(FieldElem(1), 2, 0) + BiPoly::monomial(FieldElem(1), 0, 3);
  return f;
}

struct CurvePairCase {
  BiPoly f;
  PairCurve pair;
};

inline std::vector<CurvePairCase> curve_pair_cases(unsigned seed, int germs, int per_germ) {
  std::mt19937 rng(seed);
  std::vector<CurvePairCase> out;
  for (int g = 0; g < germs; ++g) {
    const BiPoly f = random_germ(rng);
    for (int n = 0; n < per_germ; ++n)
      out.push_back({f, curve_pair(random_curve(rng), random_curve(rng), random_curve(rng), random_curve(rng))});
  }
  return out;
}

struct WeightedGerm {
  BiPoly f;
  int wx, wy, d;
};

inline std::vector<WeightedGerm> weighted_germs() {
  auto m = [](long c, int i, int j) { return BiPoly::monomial(FieldElem(Rational(c)), i, j); };
  return {
      {m(1, 3, 0) + m(1, 0, 4), 4, 3, 12},
      {m(1, 2, 0) + m(1, 0, 3), 3, 2, 6},
      {m(1, 3, 0) + m(1, 1, 4), 2, 1, 6},
      {m(1, 5, 0) + m(1, 0, 2), 2, 5, 10},
      {m(1, 2, 1) + m(1, 0, 5), 2, 1, 5},
      {m(1, 4, 0) + m(2, 2, 3) + m(-1, 0, 6), 3, 2, 12},
  };
}

struct FiberCase {
  BiPoly f;
  PairCurve pair;
  std::string origin;
};

/// Pairs (phi, w.phi) with w acting by (w^wx x, w^wy y), w^d = 1, plus
/// x -> -x images for germs even in x and the (t^4, t^3), (t^4, i t^3) pair.
inline std::vector<FiberCase> fiber_cases(unsigned seed, int per_germ) {
  std::mt19937 rng(seed);
  std::vector<FiberCase> out;
  const PuiseuxSeries t4 = PuiseuxSeries::monomial(FieldElem(1), 4), t3 = PuiseuxSeries::monomial(FieldElem(1), 3);
  out.push_back({weighted_germs()[0].f,
                 curve_pair(t4, t3, t4, t3.scaled(FieldElem::root_of_unity(4, 1))), "zeta4"});
  for (const auto& g : weighted_germs()) {
    for (int n = 0; n < per_germ; ++n) {
      const PuiseuxSeries x = random_curve(rng), y = random_curve(rng);
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.d - 1));
      const FieldElem ax = FieldElem::root_of_unity(g.d, static_cast<std::int64_t>(k) * g.wx);
      const FieldElem ay = FieldElem::root_of_unity(g.d, static_cast<std::int64_t>(k) * g.wy);
      if (ax.is_one() && ay.is_one()) continue;
      out.push_back({g.f, curve_pair(x, y, x.scaled(ax), y.scaled(ay)), "weighted"});
    }
    bool even = true;
    for (const auto& [k, c] : g.f.terms()) even = even && k.first % 2 == 0;
    if (even) {
      const PuiseuxSeries x = random_curve(rng), y = random_curve(rng);
      out.push_back({g.f, curve_pair(x, y, -x, y), "reflection"});
    }
  }
  return out;
}

}  // namespace lipsat::testing
