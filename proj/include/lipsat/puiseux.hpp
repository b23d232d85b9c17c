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

#include <cstdint>
#include <vector>

#include "lipsat/bipoly.hpp"
#include "lipsat/series.hpp"
#include "lipsat/upoly.hpp"

namespace lipsat {

struct NewtonSegment {
  Rational slope;       // x ~ y^slope
  std::int64_t a = 0;   // slope = a / b in lowest terms
  std::int64_t b = 1;
  UPoly face;           // sum of c_ij z^(i - i_left) over the segment
};

struct NewtonPolygon {
  std::vector<std::pair<int, int>> points;  // support (deg_x, deg_y)
  std::vector<NewtonSegment> segments;      // increasing slope
};

struct PuiseuxStep {
  Rational slope;
  FieldElem root;
};

/// One conjugacy class of Puiseux roots x = x(t), y = t^m of a polynomial.
struct Branch {
  PuiseuxSeries x;  // exponents are t-exponents, ramification m, so orders are y-normalized
  int m = 1;
  bool exact = false;
  int multiplicity = 1;
  BiPoly poly;
  std::vector<PuiseuxStep> provenance;

  /// The sheet y = t^m in the same representation as x.
  [[nodiscard]] PuiseuxSeries y() const { return PuiseuxSeries::monomial(FieldElem(1), m, m); }
};

struct Expansion {
  std::vector<Branch> branches;
  int vertical_multiplicity = 0;  // power of y dividing the polynomial
};

NewtonPolygon newton_polygon(const BiPoly& p);

/// Branches of p through the origin, each with back-substitution residual of
/// y-normalized order at least k.
Expansion expand_branches(const BiPoly& p, int k);

/// Order of p along the branch; valid iff AtLeast(k) or IdenticallyZero.
OrderValue verify_branch(const BiPoly& p, const Branch& b);
/// Number of verify_branch calls so far in this process.
std::uint64_t verify_branch_count();

/// The m sheets t -> zeta_m^s t, s = 0..m-1, of a branch.
std::vector<PuiseuxSeries> conjugates(const Branch& b);

}  // namespace lipsat
