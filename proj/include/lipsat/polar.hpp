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
#include <vector>

#include "lipsat/bipoly.hpp"
#include "lipsat/puiseux.hpp"
#include "lipsat/series.hpp"

namespace lipsat {

/// The polar a*f_x + b*f_y = 0, projectively normalized.
struct PolarDirection {
  FieldElem a, b;
  std::string label;

  static PolarDirection make(const FieldElem& a, const FieldElem& b);
  /// Whether the direction has the form f_x - c*f_y.
  [[nodiscard]] bool has_fx() const { return !a.is_zero(); }
};

PolarDirection x_direction();
PolarDirection y_direction();
/// f_x - c*f_y with a parameter name not used by f.
PolarDirection generic_direction(const BiPoly& f);
/// (1,0), (0,1), then the generic direction.
std::vector<PolarDirection> default_directions(const BiPoly& f);

/// Pair of curves over a common parameter. Polar pairs use y itself as the
/// parameter, so orders are y-normalized; t_scale converts them to the
/// exponents of the parameterization y = t^t_scale.
struct PairCurve {
  PuiseuxSeries x1, y1, x2, y2;
  int t_scale = 1;
  int branch1 = -1, sheet1 = 0, branch2 = -1, sheet2 = 0;
  int m1 = 1, m2 = 1;
  bool polar = false;

  [[nodiscard]] PairCurve swapped() const;
  /// "(x1, y1), (x2, y2)" in the t-parameterization.
  [[nodiscard]] std::string describe() const;
};

struct PairGeometry {
  OrderValue e1, e2;
  OrderValue contact;
  OrderValue delta_ord;
};

struct Sheet {
  int branch = 0;
  int conj = 0;
  int m = 1;
  PuiseuxSeries x;
};

struct PolarCurve {
  PolarDirection direction;
  BiPoly poly;
  Expansion expansion;
  std::vector<Sheet> sheets;
  std::vector<PairCurve> pairs;
};

/// Raises NotIsolated unless f vanishes at the origin with an isolated singularity.
void check_isolated(const BiPoly& f);

BiPoly polar_poly(const BiPoly& f, const PolarDirection& d);
PolarCurve polar_pairs(const BiPoly& f, const PolarDirection& d, int k);
PairGeometry pair_geometry(const BiPoly& f, const PairCurve& p);

/// Series x in y-normalized exponents rewritten in t with y = t^scale.
std::string series_in_t(const PuiseuxSeries& x, int scale, const std::string& var = "t");
/// The order scaled to t-exponents.
std::string t_order_string(const OrderValue& o, int scale);

struct PacketLevel {
  Rational threshold;
  std::vector<std::vector<int>> packets;  // branch indices
};

struct Packets {
  std::vector<PacketLevel> levels;             // ascending thresholds
  std::vector<std::vector<int>> coarse;        // branches split above the minimal contact
  std::vector<std::optional<OrderValue>> e;    // per coarse packet when constant
};

Packets packets(const BiPoly& f, const PolarCurve& polar);

/// Tangent line x = lambda*y, or y = 0 when lambda is absent.
struct TangentLine {
  std::optional<FieldElem> lambda;
  int multiplicity = 1;
  [[nodiscard]] std::string to_string() const;
};

std::vector<TangentLine> exceptional_lines(const BiPoly& f);
bool tangent_to(const PuiseuxSeries& x, const TangentLine& line);

struct InitialTerm {
  int sheet = 0;
  Rational exponent;
  FieldElem coefficient;
};

struct HpData {
  TangentLine line;
  std::vector<InitialTerm> terms;
  struct Ratio {
    int sheet1, sheet2;
    FieldElem value;  // coefficient2 / coefficient1
  };
  std::vector<Ratio> ratios;
};

HpData hp_data(const BiPoly& f, const TangentLine& line, const PolarCurve& polar);

struct InitialTermReport {
  Rational deg_ratio_f, deg_ratio_fy;
  FieldElem ratio_f, ratio_fy;
  bool degrees_equal = false;
  bool initial_terms_equal = false;  // meaningful when the degree is zero
  bool corrected_equal = false;      // meaningful when the degree is nonzero
  [[nodiscard]] bool holds() const;
};

/// Initial-term comparison for a pair tangent to one exceptional line.
/// HypothesisUnmet when the tangency or direction preconditions fail.
InitialTermReport initial_term_check(const BiPoly& f, const PolarDirection& d, const PairCurve& p);

}  // namespace lipsat
