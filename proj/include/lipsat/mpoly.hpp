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
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lipsat/cyclotomic.hpp"

namespace lipsat {

using SymbolId = std::uint32_t;

/// Sparse exponent vector, sorted by symbol id, no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<SymbolId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial var(SymbolId id, std::uint32_t exp = 1);

  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool is_one() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::uint32_t exponent(SymbolId id) const;
  [[nodiscard]] std::uint32_t total_degree() const;
  [[nodiscard]] Monomial with_exponent(SymbolId id, std::uint32_t exp) const;
  /// Largest symbol id present; undefined for the unit monomial.
  [[nodiscard]] SymbolId max_symbol() const { return entries_.back().first; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// True when b divides a; quotient stored in out.
  static bool divide(const Monomial& a, const Monomial& b, Monomial& out);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Lexicographic order, larger symbol ids most significant.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in parameter and radical symbols over Q(zeta_N).
class MPoly {
 public:
  using Terms = std::map<Monomial, Cyclotomic, MonomialLess>;

  MPoly() = default;
  MPoly(const Cyclotomic& c);  // NOLINT
  MPoly(long c) : MPoly(Cyclotomic(c)) {}  // NOLINT
  static MPoly var(SymbolId id, std::uint32_t exp = 1);
  static MPoly term(const Monomial& m, const Cyclotomic& c);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant coefficient (zero when absent).
  [[nodiscard]] Cyclotomic constant_term() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  [[nodiscard]] const Cyclotomic& leading_coefficient() const { return terms_.rbegin()->second; }
  [[nodiscard]] bool has_symbol(SymbolId id) const;
  [[nodiscard]] std::vector<SymbolId> symbols() const;
  [[nodiscard]] std::uint32_t degree(SymbolId id) const;
  /// Coefficients with respect to one symbol.
  [[nodiscard]] std::map<std::uint32_t, MPoly> coefficients(SymbolId id) const;
  [[nodiscard]] MPoly derivative(SymbolId id) const;
  /// Replace every coefficient c by f(monomial, c).
  [[nodiscard]] MPoly map_coefficients(const std::function<Cyclotomic(const Monomial&, const Cyclotomic&)>& f) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  [[nodiscard]] MPoly scaled(const Cyclotomic& c) const;
  [[nodiscard]] MPoly pow(std::uint32_t e) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Exact quotient; throws InvalidArgument when b does not divide a.
  [[nodiscard]] MPoly exact_div(const MPoly& b) const;
  [[nodiscard]] bool divides(const MPoly& a) const;
  /// Leading coefficient scaled to 1.
  [[nodiscard]] MPoly monic() const;

  /// ascending graded order, e.g. "1 - 2*t^3".
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Cyclotomic& c);
  Terms terms_;
};

/// Monic greatest common divisor (1 when coprime, 0 only for gcd(0,0)).
MPoly gcd(const MPoly& a, const MPoly& b);

/// Name lookup used for printing; registered by the symbol table.
std::string symbol_name(SymbolId id);

}  // namespace lipsat
