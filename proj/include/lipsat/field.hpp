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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lipsat/mpoly.hpp"

namespace lipsat {

enum class SymbolKind { Parameter, Radical };

struct SymbolInfo {
  SymbolId id = 0;
  SymbolKind kind = SymbolKind::Parameter;
  std::string name;
  /// Radicals only: name^degree -> radicand, radicand free of radicals.
  int degree = 0;
  MPoly radicand;
};

/// Process-wide append-only registry of parameter and radical symbols.
/// Lookups and registration are serialized; returned references stay valid.
class SymbolTable {
 public:
  static SymbolTable& instance();

  SymbolId parameter(const std::string& name);
  [[nodiscard]] std::optional<SymbolId> find(const std::string& name) const;
  [[nodiscard]] const SymbolInfo& info(SymbolId id) const;
  [[nodiscard]] bool is_radical(SymbolId id) const { return info(id).kind == SymbolKind::Radical; }
  /// Existing symbol for (radicand, degree) or a freshly registered one.
  SymbolId radical(const MPoly& radicand, int degree);
  [[nodiscard]] std::vector<SymbolId> radicals() const;
  [[nodiscard]] bool has_radicals() const;

 private:
  SymbolTable() = default;
  struct Impl;
  Impl& impl() const;
};

/// Element of Q(zeta_N)(parameters)[radicals]: num/den with den free of
/// radicals, num reduced by every radical rule, gcd(num, den) = 1 and den
/// monic.
class FieldElem {
 public:
  FieldElem() : num_(), den_(1) {}
  FieldElem(long v) : num_(v), den_(1) {}  // NOLINT
  FieldElem(const Rational& q) : num_(Cyclotomic(q)), den_(1) {}  // NOLINT
  FieldElem(const Cyclotomic& c) : num_(c), den_(1) {}  // NOLINT
  explicit FieldElem(const MPoly& num) : FieldElem(num, MPoly(1)) {}
  FieldElem(const MPoly& num, const MPoly& den);

  static FieldElem parameter(const std::string& name);
  static FieldElem symbol(SymbolId id);
  static FieldElem root_of_unity(int n, std::int64_t k) { return FieldElem(Cyclotomic::root_of_unity(n, k)); }

  [[nodiscard]] const MPoly& num() const noexcept { return num_; }
  [[nodiscard]] const MPoly& den() const noexcept { return den_; }

  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const;
  /// No parameter or radical symbol.
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] Cyclotomic constant_value() const;
  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] bool has_radicals() const;
  [[nodiscard]] std::vector<SymbolId> symbols() const;
  /// Maximal cyclotomic order among the coefficients.
  [[nodiscard]] int cyclotomic_order() const;

  FieldElem operator-() const { return FieldElem(-num_, den_, Normalized{}); }
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return field_div(a, b); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  [[nodiscard]] FieldElem inverse() const;
  [[nodiscard]] FieldElem pow(std::int64_t e) const;
  friend FieldElem field_div(const FieldElem& a, const FieldElem& b);
  friend FieldElem normal_form(const MPoly& num, const MPoly& den);

  /// Partial derivative with respect to a parameter (radicals by the chain rule).
  [[nodiscard]] FieldElem derivative(SymbolId param) const;
  /// Same value with every coefficient expressed over zeta_M.
  [[nodiscard]] FieldElem lift(int m) const;
  /// Substitute zeta_k^j * u for every radical u of degree k in the map.
  [[nodiscard]] FieldElem conjugate(SymbolId radical, std::int64_t j) const;

  /// Expression text in the input grammar.
  [[nodiscard]] std::string to_string() const;

 private:
  struct Normalized {};
  FieldElem(MPoly num, MPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  MPoly num_;
  MPoly den_;
};

/// Canonical representative of num/den: radicals reduced, common factors
/// cancelled, denominator monic.
FieldElem normal_form(const MPoly& num, const MPoly& den);

inline std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

/// Adjoin a k-th root of radicand. `value` is the root; `symbol` is set when
/// a fresh or existing radical symbol backs it (absent for perfect powers).
struct RadicalRoot {
  FieldElem value;
  std::optional<SymbolId> symbol;
};
RadicalRoot adjoin_radical(const FieldElem& radicand, int k);

/// A k-th root of r; roots of unity resolve inside the cyclotomic part.
FieldElem principal_root(const FieldElem& r, int k);

/// Values re-expressed over zeta_M; N must divide M for each element.
std::vector<FieldElem> lift_cyclotomic_order(const std::vector<FieldElem>& elements, int m);

}  // namespace lipsat
