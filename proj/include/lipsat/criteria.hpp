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

#include <optional>
#include <vector>

#include "lipsat/field.hpp"
#include "lipsat/saturation.hpp"

namespace lipsat {

struct WeightSystem {
  int wx = 1, wy = 1, d = 1;
  /// Weights making both monomials of x^p + y^q of degree pq.
  static WeightSystem brieskorn(int p, int q) { return {q, p, p * q}; }
};

struct MonomialVerdictRow {
  int i = 0, j = 0;
  bool lipsat_inequality = false;
  bool fr_inequality = false;
  bool wedge = false;
  bool verifiable = false;  // i >= 1 and (p - 1) does not divide i
  std::optional<Aggregate> engine_verdict;
};

bool lipsat_monomial(int p, int q, int i, int j);
bool fr_monomial(int p, int q, int i, int j);

/// Smallest i with (i, 0) satisfying each bound on the x-axis: the weight
/// inequality gives p + (q - p)/q, the prose variant p + (q - p)/p.
Rational fr_axis_bound(int p, int q);
Rational fr_axis_bound_prose(int p, int q);

BiPoly brieskorn_germ(int p, int q);

std::vector<MonomialVerdictRow> wedge_table(int p, int q, int bound, bool verify = false,
                                            PrecisionPolicy policy = {});

}  // namespace lipsat
