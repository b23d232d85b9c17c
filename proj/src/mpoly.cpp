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

#include "lipsat/mpoly.hpp"

#include <algorithm>
#include <iterator>

#include "lipsat/errors.hpp"

namespace lipsat {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& e : entries_) {
    if (e.second == 0) continue;
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  entries_ = std::move(merged);
}

Monomial Monomial::var(SymbolId id, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.entries_.push_back({id, exp});
  return m;
}

std::uint32_t Monomial::exponent(SymbolId id) const {
  for (const auto& e : entries_)
    if (e.first == id) return e.second;
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

Monomial Monomial::with_exponent(SymbolId id, std::uint32_t exp) const {
  std::vector<Entry> v;
  bool placed = false;
  for (const auto& e : entries_) {
    if (e.first == id) {
      if (exp > 0) v.push_back({id, exp});
      placed = true;
    } else {
      v.push_back(e);
    }
  }
  if (!placed && exp > 0) v.push_back({id, exp});
  return Monomial(std::move(v));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto& out = r.entries_;
  out.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
      out.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
      out.push_back(b.entries_[j++]);
    } else {
      out.push_back({a.entries_[i].first, a.entries_[i].second + b.entries_[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divide(const Monomial& a, const Monomial& b, Monomial& out) {
  std::vector<Entry> v;
  std::size_t i = 0;
  for (const auto& e : b.entries_) {
    while (i < a.entries_.size() && a.entries_[i].first < e.first) v.push_back(a.entries_[i++]);
    if (i == a.entries_.size() || a.entries_[i].first != e.first || a.entries_[i].second < e.second)
      return false;
    if (a.entries_[i].second > e.second) v.push_back({e.first, a.entries_[i].second - e.second});
    ++i;
  }
  while (i < a.entries_.size()) v.push_back(a.entries_[i++]);
  out = Monomial();
  out.entries_ = std::move(v);
  return true;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = x.size(), j = y.size();
  while (i > 0 && j > 0) {
    const auto& ex = x[i - 1];
    const auto& ey = y[j - 1];
    if (ex.first != ey.first) return ex.first < ey.first;
    if (ex.second != ey.second) return ex.second < ey.second;
    --i;
    --j;
  }
  return i == 0 && j > 0;
}

MPoly::MPoly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MPoly MPoly::var(SymbolId id, std::uint32_t exp) { return term(Monomial::var(id, exp), Cyclotomic(1)); }

MPoly MPoly::term(const Monomial& m, const Cyclotomic& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

void MPoly::add_term(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Cyclotomic MPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

bool MPoly::has_symbol(SymbolId id) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(id) > 0) return true;
  return false;
}

std::vector<SymbolId> MPoly::symbols() const {
  std::vector<SymbolId> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& e : m.entries()) ids.push_back(e.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::uint32_t MPoly::degree(SymbolId id) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(id));
  return d;
}

std::map<std::uint32_t, MPoly> MPoly::coefficients(SymbolId id) const {
  std::map<std::uint32_t, MPoly> out;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exponent(id);
    out[e].add_term(m.with_exponent(id, 0), c);
  }
  return out;
}

MPoly MPoly::derivative(SymbolId id) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exponent(id);
    if (e == 0) continue;
    r.add_term(m.with_exponent(id, e - 1), c * Cyclotomic(static_cast<long>(e)));
  }
  return r;
}

MPoly MPoly::map_coefficients(const std::function<Cyclotomic(const Monomial&, const Cyclotomic&)>& f) const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, f(m, c));
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r += b;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r -= b;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return MPoly();
  MPoly r;
  for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, x * c);
  return r;
}

MPoly MPoly::pow(std::uint32_t e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

MPoly MPoly::exact_div(const MPoly& b) const {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return scaled(b.constant_term().inverse());
  MPoly rem = *this;
  MPoly q;
  const Monomial& lb = b.leading_monomial();
  const Cyclotomic lcb_inv = b.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    Monomial qm;
    if (!Monomial::divide(rem.leading_monomial(), lb, qm))
      fail(ErrorKind::InvalidArgument, "inexact polynomial division");
    const Cyclotomic qc = rem.leading_coefficient() * lcb_inv;
    q.add_term(qm, qc);
    for (const auto& [m, c] : b.terms_) rem.add_term(qm * m, -(qc * c));
  }
  return q;
}

bool MPoly::divides(const MPoly& a) const {
  if (is_zero()) return a.is_zero();
  if (is_constant()) return true;
  MPoly rem = a;
  const Monomial& lb = leading_monomial();
  const Cyclotomic lcb_inv = leading_coefficient().inverse();
  while (!rem.is_zero()) {
    Monomial qm;
    if (!Monomial::divide(rem.leading_monomial(), lb, qm)) return false;
    const Cyclotomic qc = rem.leading_coefficient() * lcb_inv;
    for (const auto& [m, c] : terms_) rem.add_term(qm * m, -(qc * c));
  }
  return true;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

namespace {

SymbolId main_symbol(const MPoly& p) {
  SymbolId best = 0;
  bool any = false;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one()) continue;
    if (!any || m.max_symbol() > best) best = m.max_symbol();
    any = true;
  }
  return best;
}

MPoly content_in(const MPoly& p, SymbolId v) {
  MPoly g;
  for (const auto& [e, c] : p.coefficients(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly lead_coeff_in(const MPoly& p, SymbolId v, std::uint32_t& deg) {
  auto coeffs = p.coefficients(v);
  deg = coeffs.rbegin()->first;
  return coeffs.rbegin()->second;
}

MPoly pseudo_remainder(MPoly a, const MPoly& b, SymbolId v) {
  std::uint32_t db = 0;
  const MPoly lb = lead_coeff_in(b, v, db);
  while (!a.is_zero()) {
    std::uint32_t da = 0;
    const MPoly la = lead_coeff_in(a, v, da);
    if (da < db) break;
    // scalar normalization keeps rational coefficients small
    a = (lb * a - la * MPoly::var(v, da - db) * b).monic();
  }
  return a;
}

MPoly primitive_gcd(MPoly a, MPoly b, SymbolId v) {
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (true) {
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree(v) == 0) return MPoly(1);
    a = std::move(b);
    b = r.exact_div(content_in(r, v)).monic();
  }
}

using UniImage = std::vector<Cyclotomic>;

void trim(UniImage& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Image of p in Q(zeta)[v] after substituting point values for the other symbols.
UniImage specialize(const MPoly& p, SymbolId v, const std::map<SymbolId, Rational>& point) {
  UniImage out(p.degree(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Rational scale = 1;
    std::uint32_t ev = 0;
    for (const auto& [id, e] : m.entries()) {
      if (id == v) {
        ev = e;
        continue;
      }
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), point.at(id).get_num_mpz_t(), e);
      scale *= f;
    }
    out[ev] = out[ev] + c * Cyclotomic(scale);
  }
  trim(out);
  return out;
}

std::size_t image_gcd_degree(UniImage a, UniImage b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const Cyclotomic inv = b.back().inverse();
    while (a.size() >= b.size()) {
      const Cyclotomic f = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True only when gcd(a, b) is provably constant: for every shared symbol v
// some specialization of the others keeps both leading coefficients in v
// and leaves coprime images.
bool certainly_coprime(const MPoly& a, const MPoly& b) {
  const auto sa = a.symbols();
  const auto sb = b.symbols();
  std::vector<SymbolId> shared;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
  if (shared.empty()) return !(a.is_zero() || b.is_zero());
  std::vector<SymbolId> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (SymbolId v : shared) {
    bool proved = false;
    for (int attempt = 0; attempt < 4 && !proved; ++attempt) {
      std::map<SymbolId, Rational> point;
      for (SymbolId id : all) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        point[id] = Rational(static_cast<long>((state >> 33) % 1000) + 2);
      }
      const UniImage ia = specialize(a, v, point);
      const UniImage ib = specialize(b, v, point);
      if (ia.size() != a.degree(v) + 1 || ib.size() != b.degree(v) + 1) continue;
      // an unlucky point can only raise the image gcd degree
      proved = image_gcd_degree(ia, ib) == 0;
    }
    if (!proved) return false;
  }
  return true;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Monomial::Entry> v;
    for (const auto& e : a.leading_monomial().entries()) {
      const std::uint32_t x = std::min(e.second, b.leading_monomial().exponent(e.first));
      if (x > 0) v.push_back({e.first, x});
    }
    return MPoly::term(Monomial(std::move(v)), Cyclotomic(1));
  }
  if (a.is_monomial() || b.is_monomial()) {
    // a monomial and p share the largest monomial dividing every term of p
    const MPoly& m = a.is_monomial() ? a : b;
    const MPoly& p = a.is_monomial() ? b : a;
    std::vector<Monomial::Entry> v;
    for (const auto& e : m.leading_monomial().entries()) {
      std::uint32_t x = e.second;
      for (const auto& [mono, c] : p.terms()) x = std::min(x, mono.exponent(e.first));
      if (x > 0) v.push_back({e.first, x});
    }
    return MPoly::term(Monomial(std::move(v)), Cyclotomic(1));
  }
  if (a == b) return a.monic();
  if (certainly_coprime(a, b)) return MPoly(1);
  const SymbolId v = std::max(main_symbol(a), main_symbol(b));
  const std::uint32_t da = a.degree(v);
  const std::uint32_t db = b.degree(v);
  if (da == 0) return gcd(a, content_in(b, v));
  if (db == 0) return gcd(content_in(a, v), b);
  const MPoly ca = content_in(a, v);
  const MPoly cb = content_in(b, v);
  const MPoly pa = a.exact_div(ca);
  const MPoly pb = b.exact_div(cb);
  MPoly g = primitive_gcd(pa, pb, v);
  if (g.degree(v) > 0) g = g.exact_div(content_in(g, v));
  return (gcd(ca, cb) * g).monic();
}

namespace {

struct CoefText {
  bool negative = false;
  bool unit = false;
  std::string text;
};

CoefText coefficient_text(const Cyclotomic& c) {
  CoefText t;
  if (c.term_count() == 1) {
    std::size_t idx = 0;
    while (c.coeffs()[idx] == 0) ++idx;
    t.negative = c.coeffs()[idx] < 0;
    Cyclotomic mag = t.negative ? -c : c;
    t.unit = mag.is_one();
    t.text = mag.to_string();
  } else {
    t.text = "(" + c.to_string() + ")";
  }
  return t;
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Cyclotomic>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return x.first.total_degree() < y.first.total_degree();
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v) {
    CoefText ct = coefficient_text(c);
    std::string mono;
    for (const auto& e : m.entries()) {
      if (!mono.empty()) mono += "*";
      mono += symbol_name(e.first);
      if (e.second > 1) mono += "^" + std::to_string(e.second);
    }
    std::string term;
    if (mono.empty())
      term = ct.text;
    else if (ct.unit)
      term = mono;
    else
      term = ct.text + "*" + mono;
    if (first)
      out = (ct.negative ? "-" : "") + term;
    else
      out += (ct.negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace lipsat
