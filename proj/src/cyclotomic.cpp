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

#include "lipsat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lipsat/errors.hpp"

namespace lipsat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::IndeterminateOrder: return "IndeterminateOrder";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::InternalCriterionMismatch: return "InternalCriterionMismatch";
    case ErrorKind::NotAFiberPair: return "NotAFiberPair";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_short(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> exact_root(const Rational& q, int k) {
  if (q < 0 || k < 1) return std::nullopt;
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(k)) == 0)
    return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(k)) == 0)
    return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Remainder of a modulo monic m.
void reduce_mod(Dense& a, const Dense& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
  }
  a.resize(dm);
}

Dense poly_mul(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Division with remainder over Q.
void poly_divmod(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  Dense bb = b;
  trim(bb);
  const std::size_t db = bb.size() - 1;
  if (r.size() - 1 < db || (r.size() == 1 && r[0] == 0)) {
    q = Dense{Rational(0)};
    return;
  }
  q.assign(r.size() - db, Rational(0));
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rational c = r[i] / bb[db];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * bb[j];
  }
  r.resize(db == 0 ? 1 : db);
  trim(r);
}

Dense compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Dense num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Dense q, r;
    poly_divmod(num, cyclotomic_polynomial(d), q, r);
    num = q;
  }
  return num;
}

std::mutex& cyclo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::map<int, Dense> cache;
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Dense p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cyclo_mutex());
  return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

void Cyclotomic::reduce() {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  if (coeffs_.size() > deg) reduce_mod(coeffs_, phi);
  coeffs_.resize(deg, Rational(0));
}

Cyclotomic Cyclotomic::root_of_unity(int n, std::int64_t k) {
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c[static_cast<std::size_t>(k)] = 1;
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

int Cyclotomic::term_count() const {
  int n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) fail(ErrorKind::InvalidArgument, "lift target must be a multiple of the order");
  if (is_rational()) return Cyclotomic(m, {coeffs_[0]});
  const std::size_t step = static_cast<std::size_t>(m / order_);
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) {
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    Cyclotomic r;
    r.order_ = a.order_;
    r.coeffs_ = std::move(c);
    return r;
  }
  const int m = static_cast<int>(lcm64(a.order_, b.order_));
  return a.lift(m) + b.lift(m);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_rational()) {
    Cyclotomic r = b;
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    if (a.order_ != b.order_ && a.order_ != 1) return r.lift(static_cast<int>(lcm64(a.order_, b.order_)));
    return r;
  }
  if (b.is_rational()) return b * a;
  if (a.order_ != b.order_) {
    const int m = static_cast<int>(lcm64(a.order_, b.order_));
    return a.lift(m) * b.lift(m);
  }
  return Cyclotomic(a.order_, poly_mul(a.coeffs_, b.coeffs_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_N)");
  if (is_rational()) return Cyclotomic(order_, {1 / coeffs_[0]});
  // Extended Euclid: s*a + t*phi = 1.
  Dense r0 = cyclotomic_polynomial(order_);
  Dense r1 = coeffs_;
  trim(r1);
  Dense s0{Rational(0)};
  Dense s1{Rational(1)};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    Dense q, r;
    poly_divmod(r0, r1, q, r);
    Dense qs = poly_mul(q, s1);
    Dense s2(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant.
  for (auto& c : s0) c /= r0[0];
  return Cyclotomic(order_, std::move(s0));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const int m = static_cast<int>(lcm64(a.order_, b.order_));
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::int64_t Cyclotomic::root_of_unity_exponent() const {
  if (term_count() != 1) return -1;
  for (int j = 0; j < order_; ++j) {
    Cyclotomic z = root_of_unity(order_, j);
    if (z == *this) return 2 * j;
    if (-z == *this) return (2 * j + order_) % (2 * order_);
  }
  return -1;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = rational_short(mag);
    } else {
      std::string z = "zeta_" + std::to_string(order_);
      if (k > 1) z += "^" + std::to_string(k);
      term = mag == 1 ? z : rational_short(mag) + "*" + z;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return first ? "0" : out;
}

}  // namespace lipsat
