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
#include <string>
#include <utility>
#include <vector>

#include "lipsat/bipoly.hpp"
#include "lipsat/polar.hpp"
#include "lipsat/series.hpp"

namespace lipsat {

/// An element of the rank-2 module of series pairs.
struct PairVector {
  PuiseuxSeries c1, c2;
};

struct PulledBackModule {
  std::vector<PairVector> generators;
  std::vector<std::string> labels;
  PuiseuxSeries delta;  // minimal-order generator of the pulled-back diagonal ideal
};

enum class Outcome { Pass, Fail, Indeterminate };
enum class Criterion { GeneralEngine, ZeroDeterminant, MinimalDeterminant, RegularQuotient };

std::string to_string(Outcome o);
std::string to_string(Criterion c);

struct ReducedBasis {
  std::optional<std::size_t> pivot;  // index of the generator with minimal first component
  OrderValue a = OrderValue::infinite();
  OrderValue b = OrderValue::infinite();
  std::vector<PuiseuxSeries> second;  // second components after eliminating the pivot
};

struct Verdict {
  Outcome outcome = Outcome::Indeterminate;
  OrderValue lhs = OrderValue::infinite();
  OrderValue threshold = OrderValue::infinite();
  Criterion criterion = Criterion::GeneralEngine;
  std::string stage;  // "first" or "second" component comparison
  std::optional<PuiseuxSeries> residual;
};

/// Shortcut criterion outcome; `applied` is false when its hypotheses fail or
/// cannot be decided at the current precision.
struct ShortcutResult {
  Criterion criterion = Criterion::GeneralEngine;
  bool applied = false;
  std::string reason;
  Outcome outcome = Outcome::Indeterminate;
  OrderValue lhs = OrderValue::infinite();
  OrderValue threshold = OrderValue::infinite();
};

struct LeadingTerm {
  std::string name;
  OrderValue order;
  std::optional<FieldElem> coefficient;
};

struct PairReport {
  PairCurve pair;
  PairGeometry geometry;
  OrderValue i1, i2, det_order;
  Verdict verdict;
  std::vector<ShortcutResult> shortcuts;
  std::vector<LeadingTerm> leading;
  int precision = 0;
};

struct DirectionReport {
  PolarDirection direction;
  BiPoly polar;
  int vertical_multiplicity = 0;
  int precision = 0;
  std::vector<PairReport> pairs;
  std::string error;  // set when the direction could not be resolved
};

enum class Aggregate { Fail, PassPolar, Indeterminate };
std::string to_string(Aggregate a);

struct SaturationReport {
  BiPoly f, g;
  std::vector<DirectionReport> directions;
  Aggregate outcome = Aggregate::PassPolar;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (direction, pair)
};

/// Branch precision ladder for polar scans: start, doubled on every
/// undecided comparison, never beyond cap.
struct PrecisionPolicy {
  int initial = 8;
  int cap = 512;
};

/// 4 * total degree + 16, the default precision for single expansions and
/// explicitly supplied pairs.
int default_precision(const BiPoly& f, const BiPoly& g = BiPoly());

PairVector doubled(const BiPoly& h, const PairCurve& p);
PulledBackModule pair_module(const BiPoly& f, const PairCurve& p);
ReducedBasis reduce(const PulledBackModule& m, int k);
Verdict module_membership(const PairVector& v, const PulledBackModule& m, int k);
PuiseuxSeries det_D(const BiPoly& g, const BiPoly& f, const PairCurve& p);

/// General engine plus shortcut cross-checks; throws InternalCriterionMismatch
/// when an applicable shortcut disagrees with the engine.
PairReport check_pair(const BiPoly& g, const BiPoly& f, const PairCurve& p, const PolarDirection& d, int k);

SaturationReport check_saturation_polar(const BiPoly& f, const BiPoly& g, const std::vector<PolarDirection>& dirs,
                                        PrecisionPolicy policy);

struct FamilyReport {
  std::string parameter;
  SaturationReport report;
};

/// Singular locus along the parameter axis: F(0) = F_x(0) = F_y(0) = 0.
void check_family_hypotheses(const BiPoly& F);
std::vector<FamilyReport> check_family(const BiPoly& F, const std::vector<std::string>& params, PrecisionPolicy policy);

/// Throws NotAFiberPair unless f o phi1 - f o phi2 vanishes to order >= k.
void require_fiber_pair(const BiPoly& f, const PairCurve& p, int k);
Verdict check_fiber_pair(const BiPoly& f, const PairCurve& p, const BiPoly& g, int k);
Verdict verify_tau_derivative_membership(const BiPoly& f, const PairCurve& p, int k);
Verdict verify_fiber_pair_membership(const BiPoly& f, const PairCurve& p, int k);

}  // namespace lipsat
