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
#include <optional>
#include <string>

#include "lipsat/bipoly.hpp"
#include "lipsat/field.hpp"

namespace lipsat {

/// Order of a truncated series: exact, a lower bound, or +infinity.
struct OrderValue {
  enum class Kind { Exact, AtLeast, IdenticallyZero };
  Kind kind = Kind::IdenticallyZero;
  Rational value = 0;

  static OrderValue exact(const Rational& v) { return {Kind::Exact, v}; }
  static OrderValue at_least(const Rational& v) { return {Kind::AtLeast, v}; }
  static OrderValue infinite() { return {Kind::IdenticallyZero, 0}; }
  [[nodiscard]] bool is_exact() const { return kind == Kind::Exact; }
  [[nodiscard]] bool is_infinite() const { return kind == Kind::IdenticallyZero; }
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const OrderValue& a, const OrderValue& b) {
    return a.kind == b.kind && (a.kind == Kind::IdenticallyZero || a.value == b.value);
  }
};

/// Truncated Puiseux series sum c_e tau^(e/m), known modulo tau^(T/m).
/// A missing truncation means the series is exact.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  PuiseuxSeries(const FieldElem& c);  // NOLINT
  static PuiseuxSeries monomial(const FieldElem& c, std::int64_t num, std::int64_t ram = 1);
  static PuiseuxSeries from_terms(const std::map<std::int64_t, FieldElem>& terms, std::int64_t ram,
                                  std::optional<std::int64_t> trunc = std::nullopt);
  /// The zero series known only modulo tau^(num/ram).
  static PuiseuxSeries big_o(std::int64_t num, std::int64_t ram = 1);

  [[nodiscard]] std::int64_t ramification() const noexcept { return ram_; }
  [[nodiscard]] const std::map<std::int64_t, FieldElem>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_exact() const noexcept { return !trunc_.has_value(); }
  /// Truncation numerator at the current ramification.
  [[nodiscard]] std::optional<std::int64_t> trunc_num() const noexcept { return trunc_; }
  [[nodiscard]] std::optional<Rational> trunc() const;
  [[nodiscard]] bool is_identically_zero() const { return is_exact() && terms_.empty(); }

  [[nodiscard]] OrderValue order() const;
  /// Lowest stored exponent numerator, or the truncation if none.
  [[nodiscard]] std::optional<std::int64_t> valuation_num() const;
  [[nodiscard]] FieldElem coeff(std::int64_t num) const;
  [[nodiscard]] FieldElem leading_coefficient() const;

  /// Same series over ramification m (a multiple of the current one).
  [[nodiscard]] PuiseuxSeries with_ramification(std::int64_t m) const;
  /// Smallest ramification representing the stored exponents and truncation.
  [[nodiscard]] PuiseuxSeries minimized() const;
  /// Drop everything at exponent >= num/ramification().
  [[nodiscard]] PuiseuxSeries truncated(std::int64_t num) const;
  [[nodiscard]] PuiseuxSeries truncated_at(const Rational& e) const;
  [[nodiscard]] PuiseuxSeries shifted(std::int64_t num) const;
  [[nodiscard]] PuiseuxSeries scaled(const FieldElem& c) const;
  /// Coefficient-wise map, keeping exponents and truncation.
  template <class F>
  [[nodiscard]] PuiseuxSeries map_coefficients(F&& f) const {
    PuiseuxSeries r;
    r.ram_ = ram_;
    r.trunc_ = trunc_;
    for (const auto& [e, c] : terms_) r.put(e, f(e, c));
    return r;
  }
  /// tau * d/dtau.
  [[nodiscard]] PuiseuxSeries tau_derivative() const;
  /// Inverse of a series with exact nonzero order q, to the given absolute
  /// truncation numerator; the truncation is min(K, T - 2q) for inexact input.
  [[nodiscard]] PuiseuxSeries invert(std::int64_t k_num) const;
  [[nodiscard]] PuiseuxSeries pow(int e) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  /// Terms "c*t^(n/d)" in ascending order, plus "O(t^(n/d))" when truncated.
  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

 private:
  void put(std::int64_t e, const FieldElem& c);
  void normalize();

  std::int64_t ram_ = 1;
  std::map<std::int64_t, FieldElem> terms_;
  std::optional<std::int64_t> trunc_;

  friend void unify(PuiseuxSeries& a, PuiseuxSeries& b);
};

/// Lift both series to a common ramification.
void unify(PuiseuxSeries& a, PuiseuxSeries& b);

/// Substitute series for x and y. An optional cap bounds the result's
/// absolute truncation exponent.
PuiseuxSeries substitute(const BiPoly& p, const PuiseuxSeries& x, const PuiseuxSeries& y,
                         std::optional<Rational> cap = std::nullopt);

/// Whether a >= b, or nullopt when a lower bound blocks the decision.
std::optional<bool> order_geq(const OrderValue& a, const OrderValue& b);
/// Same as order_geq but raises IndeterminateOrder instead of nullopt.
bool require_geq(const OrderValue& a, const OrderValue& b);

}  // namespace lipsat
