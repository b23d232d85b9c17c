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

#include "lipsat/criteria.hpp"

#include <numeric>

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

void require_order(int p, int q) {
  if (p < 2 || q <= p) fail(ErrorKind::InvalidArgument, "need 2 <= p < q");
}

void require_irreducible_polar(int p, int q) {
  if (std::gcd(p - 1, q - 1) != 1)
    fail(ErrorKind::HypothesisUnmet, "gcd(p-1, q-1) != 1: the generic polar curve is reducible");
}

Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

bool lipsat_monomial(int p, int q, int i, int j) {
  require_order(p, q);
  require_irreducible_polar(p, q);
  if (i == 0 && j >= q) return true;
  return i * (q - 1) + j * (p - 1) >= (q - 1) * (p - 1) + (q - 1);
}

bool fr_monomial(int p, int q, int i, int j) {
  require_order(p, q);
  const WeightSystem w = WeightSystem::brieskorn(p, q);
  return i * w.wx + j * w.wy >= w.d + q - p;
}

Rational fr_axis_bound(int p, int q) { return Rational(p) + frac(q - p, q); }
Rational fr_axis_bound_prose(int p, int q) { return Rational(p) + frac(q - p, p); }

BiPoly brieskorn_germ(int p, int q) {
  return BiPoly::monomial(FieldElem(1), p, 0) + BiPoly::monomial(FieldElem(1), 0, q);
}

std::vector<MonomialVerdictRow> wedge_table(int p, int q, int bound, bool verify, PrecisionPolicy policy) {
  require_order(p, q);
  require_irreducible_polar(p, q);
  std::vector<MonomialVerdictRow> rows;
  const BiPoly f = brieskorn_germ(p, q);
  const auto dirs = default_directions(f);
  for (int i = 0; i <= bound; ++i) {
    for (int j = 0; i + j <= bound; ++j) {
      MonomialVerdictRow r;
      r.i = i;
      r.j = j;
      r.lipsat_inequality = lipsat_monomial(p, q, i, j);
      r.fr_inequality = fr_monomial(p, q, i, j);
      r.wedge = r.lipsat_inequality && !r.fr_inequality;
      r.verifiable = i >= 1 && i % (p - 1) != 0;
      if (verify && r.verifiable)
        r.engine_verdict = check_saturation_polar(f, BiPoly::monomial(FieldElem(1), i, j), dirs, policy).outcome;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace lipsat
