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

#include "lipsat/series.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

Rational frac(std::int64_t n, std::int64_t d) {
  Rational q(static_cast<long>(n), static_cast<unsigned long>(d));
  q.canonicalize();
  return q;
}

std::int64_t ceil_scaled(const Rational& e, std::int64_t m) {
  // smallest n with n/m >= e
  Rational s = e * Rational(static_cast<long>(m));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return q.get_si();
}

std::string exponent_text(std::int64_t n, std::int64_t d) {
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  n /= g;
  d /= g;
  if (d == 1) return n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n);
  return "(" + std::to_string(n) + "/" + std::to_string(d) + ")";
}

}  // namespace

std::string OrderValue::to_string() const {
  switch (kind) {
    case Kind::Exact:
      return rational_string(value);
    case Kind::AtLeast:
      return ">=" + rational_string(value);
    case Kind::IdenticallyZero:
      break;
  }
  return "inf";
}

PuiseuxSeries::PuiseuxSeries(const FieldElem& c) { put(0, c); }

PuiseuxSeries PuiseuxSeries::monomial(const FieldElem& c, std::int64_t num, std::int64_t ram) {
  PuiseuxSeries s;
  s.ram_ = ram;
  s.put(num, c);
  return s;
}

PuiseuxSeries PuiseuxSeries::from_terms(const std::map<std::int64_t, FieldElem>& terms, std::int64_t ram,
                                        std::optional<std::int64_t> trunc) {
  PuiseuxSeries s;
  s.ram_ = ram;
  s.trunc_ = trunc;
  for (const auto& [e, c] : terms) s.put(e, c);
  return s;
}

PuiseuxSeries PuiseuxSeries::big_o(std::int64_t num, std::int64_t ram) {
  PuiseuxSeries s;
  s.ram_ = ram;
  s.trunc_ = num;
  return s;
}

void PuiseuxSeries::put(std::int64_t e, const FieldElem& c) {
  if (c.is_zero() || (trunc_ && e >= *trunc_)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PuiseuxSeries::normalize() {
  if (!trunc_) return;
  terms_.erase(terms_.lower_bound(*trunc_), terms_.end());
}

std::optional<Rational> PuiseuxSeries::trunc() const {
  if (!trunc_) return std::nullopt;
  return frac(*trunc_, ram_);
}

OrderValue PuiseuxSeries::order() const {
  if (!terms_.empty()) return OrderValue::exact(frac(terms_.begin()->first, ram_));
  if (trunc_) return OrderValue::at_least(frac(*trunc_, ram_));
  return OrderValue::infinite();
}

std::optional<std::int64_t> PuiseuxSeries::valuation_num() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return trunc_;
}

FieldElem PuiseuxSeries::coeff(std::int64_t num) const {
  auto it = terms_.find(num);
  return it == terms_.end() ? FieldElem() : it->second;
}

FieldElem PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorKind::IndeterminateOrder, "series has no known nonzero term");
  return terms_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::with_ramification(std::int64_t m) const {
  if (m == ram_) return *this;
  if (m % ram_ != 0) fail(ErrorKind::InvalidArgument, "ramification must be a multiple");
  const std::int64_t f = m / ram_;
  PuiseuxSeries r;
  r.ram_ = m;
  if (trunc_) r.trunc_ = *trunc_ * f;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * f, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::minimized() const {
  std::int64_t g = ram_;
  if (trunc_) g = std::gcd(g, *trunc_ < 0 ? -*trunc_ : *trunc_);
  for (const auto& [e, c] : terms_) g = std::gcd(g, e < 0 ? -e : e);
  if (g <= 1) return *this;
  PuiseuxSeries r;
  r.ram_ = ram_ / g;
  if (trunc_) r.trunc_ = *trunc_ / g;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e / g, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::truncated(std::int64_t num) const {
  PuiseuxSeries r = *this;
  if (!r.trunc_ || num < *r.trunc_) r.trunc_ = num;
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::truncated_at(const Rational& e) const {
  const Rational s = e * Rational(static_cast<long>(ram_));
  if (s.get_den() == 1) return truncated(s.get_num().get_si());
  const auto m = static_cast<std::int64_t>(lcm64(ram_, s.get_den().get_si()));
  return with_ramification(m).truncated(ceil_scaled(e, m));
}

PuiseuxSeries PuiseuxSeries::shifted(std::int64_t num) const {
  PuiseuxSeries r;
  r.ram_ = ram_;
  if (trunc_) r.trunc_ = *trunc_ + num;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + num, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const FieldElem& c) const {
  if (c.is_zero()) {
    PuiseuxSeries r;
    r.ram_ = ram_;
    return r;
  }
  return map_coefficients([&](std::int64_t, const FieldElem& v) { return v * c; });
}

PuiseuxSeries PuiseuxSeries::tau_derivative() const {
  return map_coefficients(
      [&](std::int64_t e, const FieldElem& v) { return v * FieldElem(frac(e, ram_)); });
}

PuiseuxSeries PuiseuxSeries::invert(std::int64_t k_num) const {
  if (terms_.empty()) fail(ErrorKind::NotAUnit, "series has no known leading term");
  const std::int64_t q = terms_.begin()->first;
  std::int64_t limit = k_num;
  if (trunc_) limit = std::min(limit, *trunc_ - 2 * q);
  const FieldElem lead_inv = terms_.begin()->second.inverse();
  // unit part u = 1 + sum u_k tau^k
  std::vector<std::pair<std::int64_t, FieldElem>> u;
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) u.emplace_back(it->first - q, it->second * lead_inv);
  const std::int64_t n_max = limit + q;  // result exponents n - q < limit
  std::map<std::int64_t, FieldElem> v;
  if (n_max > 0) v.emplace(0, FieldElem(1));
  // v_n = -sum u_k v_{n-k}; only sums of u exponents can be nonzero
  for (std::int64_t n = 1; n < n_max; ++n) {
    FieldElem acc;
    bool any = false;
    for (const auto& [k, uk] : u) {
      if (k > n) break;
      auto it = v.find(n - k);
      if (it == v.end()) continue;
      acc -= uk * it->second;
      any = true;
    }
    if (any && !acc.is_zero()) v.emplace(n, acc);
  }
  PuiseuxSeries r;
  r.ram_ = ram_;
  r.trunc_ = limit;
  for (const auto& [n, c] : v) r.put(n - q, c * lead_inv);
  return r;
}

PuiseuxSeries PuiseuxSeries::pow(int e) const {
  if (e < 0) fail(ErrorKind::InvalidArgument, "negative series power");
  PuiseuxSeries result(FieldElem(1));
  PuiseuxSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  return map_coefficients([](std::int64_t, const FieldElem& v) { return -v; });
}

void unify(PuiseuxSeries& a, PuiseuxSeries& b) {
  if (a.ram_ == b.ram_) return;
  const auto m = static_cast<std::int64_t>(lcm64(a.ram_, b.ram_));
  a = a.with_ramification(m);
  b = b.with_ramification(m);
}

PuiseuxSeries operator+(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in, b = b_in;
  unify(a, b);
  if (b.trunc_ && (!a.trunc_ || *b.trunc_ < *a.trunc_)) a.trunc_ = b.trunc_;
  a.normalize();
  for (const auto& [e, c] : b.terms_) a.put(e, c);
  return a;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in, b = b_in;
  unify(a, b);
  PuiseuxSeries r;
  r.ram_ = a.ram_;
  if (a.is_identically_zero() || b.is_identically_zero()) return r;
  const auto va = a.valuation_num(), vb = b.valuation_num();
  if (a.trunc_) r.trunc_ = *a.trunc_ + *vb;
  if (b.trunc_) {
    const std::int64_t t = *b.trunc_ + *va;
    if (!r.trunc_ || t < *r.trunc_) r.trunc_ = t;
  }
  for (const auto& [ea, ca] : a.terms_) {
    if (r.trunc_ && ea + *vb >= *r.trunc_) break;
    for (const auto& [eb, cb] : b.terms_) {
      if (r.trunc_ && ea + eb >= *r.trunc_) break;
      r.put(ea + eb, ca * cb);
    }
  }
  return r;
}

bool operator==(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in.minimized(), b = b_in.minimized();
  unify(a, b);
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

std::string PuiseuxSeries::to_string(const std::string& var) const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coef = c.to_string();
    const bool simple = c.is_constant() && c.is_rational();
    bool negative = false;
    if (simple && coef[0] == '-') {
      negative = true;
      coef = coef.substr(1);
    }
    std::string body;
    const std::string mono = e == 0 ? "" : e == ram_ ? var : var + "^" + exponent_text(e, ram_);
    if (mono.empty()) {
      body = simple ? coef : "(" + coef + ")";
    } else if (simple && coef == "1") {
      body = mono;
    } else {
      body = (simple ? coef : "(" + coef + ")") + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  if (trunc_) {
    const std::string o = "O(" + var + "^" + exponent_text(*trunc_, ram_) + ")";
    out = out.empty() ? o : out + " + " + o;
  }
  return out.empty() ? "0" : out;
}

PuiseuxSeries substitute(const BiPoly& p, const PuiseuxSeries& x, const PuiseuxSeries& y,
                         std::optional<Rational> cap) {
  auto clip = [&](const PuiseuxSeries& s) { return cap ? s.truncated_at(*cap) : s; };
  std::vector<PuiseuxSeries> px{PuiseuxSeries(FieldElem(1))}, py{PuiseuxSeries(FieldElem(1))};
  const PuiseuxSeries xc = clip(x), yc = clip(y);
  for (int i = 1; i <= p.degree_x(); ++i) px.push_back(clip(px.back() * xc));
  for (int j = 1; j <= p.degree_y(); ++j) py.push_back(clip(py.back() * yc));
  PuiseuxSeries acc;
  if (cap) acc = PuiseuxSeries().truncated_at(*cap);
  for (const auto& [k, c] : p.terms())
    acc = acc + clip(px[static_cast<std::size_t>(k.first)] * py[static_cast<std::size_t>(k.second)]).scaled(c);
  return acc;
}

std::optional<bool> order_geq(const OrderValue& a, const OrderValue& b) {
  using K = OrderValue::Kind;
  if (a.kind == K::IdenticallyZero) return true;
  if (b.kind == K::IdenticallyZero) {
    if (a.kind == K::Exact) return false;
    return std::nullopt;
  }
  if (a.kind == K::Exact) {
    if (b.kind == K::Exact) return a.value >= b.value;
    if (a.value < b.value) return false;
    return std::nullopt;
  }
  if (b.kind == K::Exact && a.value >= b.value) return true;
  return std::nullopt;
}

bool require_geq(const OrderValue& a, const OrderValue& b) {
  auto r = order_geq(a, b);
  if (!r) fail(ErrorKind::IndeterminateOrder, "cannot compare orders " + a.to_string() + " and " + b.to_string());
  return *r;
}

}  // namespace lipsat
