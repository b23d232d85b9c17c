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
#include <map>
#include <string>
#include <utility>

#include "lipsat/field.hpp"
#include "lipsat/upoly.hpp"

namespace lipsat {

/// Sparse polynomial in x and y over FieldElem. Keys are (deg_x, deg_y).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const FieldElem& c);  // NOLINT
  static BiPoly monomial(const FieldElem& c, int i, int j);
  static BiPoly x() { return monomial(FieldElem(1), 1, 0); }
  static BiPoly y() { return monomial(FieldElem(1), 0, 1); }

  [[nodiscard]] const std::map<Key, FieldElem>& terms() const noexcept { return t_; }
  [[nodiscard]] bool is_zero() const noexcept { return t_.empty(); }
  [[nodiscard]] FieldElem coeff(int i, int j) const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] int degree_x() const;
  [[nodiscard]] int degree_y() const;
  /// Lowest total degree of a term, -1 for zero.
  [[nodiscard]] int order() const;
  /// Homogeneous component of total degree d.
  [[nodiscard]] BiPoly homogeneous_part(int d) const;
  /// Largest k with x^k dividing the polynomial, and likewise for y.
  [[nodiscard]] int x_valuation() const;
  [[nodiscard]] int y_valuation() const;
  [[nodiscard]] BiPoly shift_down(int i, int j) const;

  [[nodiscard]] BiPoly dx() const;
  [[nodiscard]] BiPoly dy() const;
  [[nodiscard]] BiPoly dparam(SymbolId p) const;
  [[nodiscard]] BiPoly pow(int e) const;
  [[nodiscard]] BiPoly scaled(const FieldElem& c) const;
  /// P(a x + b y, c x + d y).
  [[nodiscard]] BiPoly linear_substitute(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                                         const FieldElem& d) const;
  [[nodiscard]] FieldElem eval(const FieldElem& x, const FieldElem& y) const;
  /// Coefficients of y^j * x^0..: column j as a univariate polynomial in x.
  [[nodiscard]] UPoly column_in_x(int j) const;
  [[nodiscard]] bool has_symbol(SymbolId id) const;
  [[nodiscard]] int cyclotomic_order() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator+=(const BiPoly& o);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  void add_term(int i, int j, const FieldElem& c);

  /// Expression text using the given variable names, ascending graded order.
  [[nodiscard]] std::string to_string(const std::string& xn = "x", const std::string& yn = "y") const;

 private:
  std::map<Key, FieldElem> t_;
};

}  // namespace lipsat
