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
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lipsat {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text "num/den" (denominator always present).
std::string rational_string(const Rational& q);
/// Shortest text: "3", "-5/7".
std::string rational_short(const Rational& q);

/// Positive k-th root of a positive rational when it is exact.
std::optional<Rational> exact_root(const Rational& q, int k);

std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Cyclotomic polynomial Phi_n as dense rational coefficients (low to high).
const std::vector<Rational>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
/// always reduced modulo Phi_N.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}  // NOLINT
  Cyclotomic(const Rational& q) : order_(1), coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// zeta_N^k.
  static Cyclotomic root_of_unity(int n, std::int64_t k);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_rational() const;
  /// Valid only when is_rational().
  [[nodiscard]] const Rational& rational() const { return coeffs_[0]; }

  /// Same value expressed over zeta_M, M a multiple of order().
  [[nodiscard]] Cyclotomic lift(int m) const;

  /// If the value is +-zeta_N^j for the stored N, returns j in [0, 2N) such
  /// that value = zeta_{2N}^j; otherwise -1.
  [[nodiscard]] std::int64_t root_of_unity_exponent() const;

  [[nodiscard]] Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "2/3", "zeta_4", "1/2 + 3*zeta_6^2" ...
  [[nodiscard]] std::string to_string() const;
  /// Number of nonzero coordinates.
  [[nodiscard]] int term_count() const;

 private:
  void reduce();

  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace lipsat
