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

#include "lipsat/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace lipsat {

BiPoly::BiPoly(const FieldElem& c) {
  if (!c.is_zero()) t_.emplace(Key{0, 0}, c);
}

BiPoly BiPoly::monomial(const FieldElem& c, int i, int j) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

void BiPoly::add_term(int i, int j, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FieldElem BiPoly::coeff(int i, int j) const {
  auto it = t_.find(Key{i, j});
  return it == t_.end() ? FieldElem() : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

int BiPoly::order() const {
  int d = -1;
  for (const auto& [k, c] : t_)
    if (d < 0 || k.first + k.second < d) d = k.first + k.second;
  return d;
}

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.first + k.second == d) r.t_.emplace(k, c);
  return r;
}

int BiPoly::x_valuation() const {
  int v = -1;
  for (const auto& [k, c] : t_)
    if (v < 0 || k.first < v) v = k.first;
  return std::max(v, 0);
}

int BiPoly::y_valuation() const {
  int v = -1;
  for (const auto& [k, c] : t_)
    if (v < 0 || k.second < v) v = k.second;
  return std::max(v, 0);
}

BiPoly BiPoly::shift_down(int i, int j) const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.t_.emplace(Key{k.first - i, k.second - j}, c);
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * FieldElem(static_cast<long>(k.first)));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * FieldElem(static_cast<long>(k.second)));
  return r;
}

BiPoly BiPoly::dparam(SymbolId p) const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c.derivative(p));
  return r;
}

BiPoly BiPoly::pow(int e) const {
  BiPoly result(FieldElem(1));
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BiPoly BiPoly::scaled(const FieldElem& s) const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c * s);
  return r;
}

BiPoly BiPoly::linear_substitute(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                                 const FieldElem& d) const {
  const BiPoly lx = monomial(a, 1, 0) + monomial(b, 0, 1);
  const BiPoly ly = monomial(c, 1, 0) + monomial(d, 0, 1);
  std::vector<BiPoly> px{BiPoly(FieldElem(1))}, py{BiPoly(FieldElem(1))};
  for (int i = 1; i <= degree_x(); ++i) px.push_back(px.back() * lx);
  for (int j = 1; j <= degree_y(); ++j) py.push_back(py.back() * ly);
  BiPoly r;
  for (const auto& [k, co] : t_) r += (px[static_cast<std::size_t>(k.first)] * py[static_cast<std::size_t>(k.second)]).scaled(co);
  return r;
}

FieldElem BiPoly::eval(const FieldElem& x, const FieldElem& y) const {
  FieldElem acc;
  for (const auto& [k, c] : t_) acc += c * x.pow(k.first) * y.pow(k.second);
  return acc;
}

UPoly BiPoly::column_in_x(int j) const {
  std::vector<FieldElem> c(static_cast<std::size_t>(std::max(0, degree_x() + 1)));
  for (const auto& [k, co] : t_)
    if (k.second == j) c[static_cast<std::size_t>(k.first)] = co;
  return UPoly(std::move(c));
}

bool BiPoly::has_symbol(SymbolId id) const {
  for (const auto& [k, c] : t_) {
    const auto s = c.symbols();
    if (std::find(s.begin(), s.end(), id) != s.end()) return true;
  }
  return false;
}

int BiPoly::cyclotomic_order() const {
  int m = 1;
  for (const auto& [k, c] : t_) m = static_cast<int>(lcm64(m, c.cyclotomic_order()));
  return m;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  r += b;
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

namespace {

std::string power(const std::string& v, int e) {
  if (e == 0) return "";
  return e == 1 ? v : v + "^" + std::to_string(e);
}

}  // namespace

std::string BiPoly::to_string(const std::string& xn, const std::string& yn) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Key, FieldElem>> items(t_.begin(), t_.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl < dr;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [k, c] : items) {
    std::string mono = power(xn, k.first);
    const std::string ym = power(yn, k.second);
    if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
    std::string coef = c.to_string();
    bool negative = false;
    if (!coef.empty() && coef[0] == '-' && c.is_constant() && c.is_rational()) {
      negative = true;
      coef = coef.substr(1);
    }
    const bool simple = c.is_constant() && c.is_rational();
    std::string body;
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
  return out;
}

}  // namespace lipsat
