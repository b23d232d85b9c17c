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

#include <string>
#include <vector>

#include "lipsat/field.hpp"

namespace lipsat {

/// Dense univariate polynomial over FieldElem, coefficients low to high.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElem> coeffs);

  [[nodiscard]] const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const FieldElem& lead() const { return c_.back(); }
  [[nodiscard]] FieldElem coeff(int i) const;
  [[nodiscard]] FieldElem eval(const FieldElem& z) const;
  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] UPoly monic() const;
  /// Only the constant and leading coefficients are nonzero, degree >= 2.
  [[nodiscard]] bool is_binomial() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

  [[nodiscard]] std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's square-free decomposition: p = lead * prod factors[i]^(i+1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

struct PolyRoot {
  FieldElem value;
  int multiplicity = 1;
};

/// Roots of p(z^b) up to the substitution z -> zeta_b z: one representative
/// per root w of p, with z^b = w. Supports square-free factors that are
/// linear, binomial, or have rational roots over Q; anything else raises
/// UnsupportedExtension. Zero roots are not reported.
std::vector<PolyRoot> solve_face(const UPoly& p, int b = 1);

}  // namespace lipsat
