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

#include "lipsat/field.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "lipsat/errors.hpp"

namespace lipsat {

struct SymbolTable::Impl {
  mutable std::shared_mutex mutex;
  std::deque<SymbolInfo> symbols;
  std::map<std::string, SymbolId> by_name;
  std::vector<SymbolId> radical_ids;
  std::atomic<int> radical_count{0};
};

SymbolTable& SymbolTable::instance() {
  static SymbolTable table;
  return table;
}

SymbolTable::Impl& SymbolTable::impl() const {
  static Impl storage;
  return storage;
}

bool SymbolTable::has_radicals() const { return impl().radical_count.load() > 0; }

SymbolId SymbolTable::parameter(const std::string& name) {
  auto& d = impl();
  std::unique_lock lock(d.mutex);
  auto it = d.by_name.find(name);
  if (it != d.by_name.end()) {
    if (d.symbols[it->second].kind != SymbolKind::Parameter)
      fail(ErrorKind::InvalidArgument, "symbol '" + name + "' is a radical");
    return it->second;
  }
  SymbolInfo info;
  info.id = static_cast<SymbolId>(d.symbols.size());
  info.kind = SymbolKind::Parameter;
  info.name = name;
  d.symbols.push_back(info);
  d.by_name.emplace(name, info.id);
  return info.id;
}

std::optional<SymbolId> SymbolTable::find(const std::string& name) const {
  auto& d = impl();
  std::shared_lock lock(d.mutex);
  auto it = d.by_name.find(name);
  if (it == d.by_name.end()) return std::nullopt;
  return it->second;
}

const SymbolInfo& SymbolTable::info(SymbolId id) const {
  auto& d = impl();
  std::shared_lock lock(d.mutex);
  if (id >= d.symbols.size()) fail(ErrorKind::UnknownSymbol, "symbol id " + std::to_string(id));
  return d.symbols[id];
}

SymbolId SymbolTable::radical(const MPoly& radicand, int degree) {
  auto& d = impl();
  std::unique_lock lock(d.mutex);
  for (SymbolId id : d.radical_ids) {
    const auto& s = d.symbols[id];
    if (s.degree == degree && s.radicand == radicand) return id;
  }
  SymbolInfo info;
  info.id = static_cast<SymbolId>(d.symbols.size());
  info.kind = SymbolKind::Radical;
  info.name = "rho" + std::to_string(d.radical_ids.size() + 1);
  info.degree = degree;
  info.radicand = radicand;
  d.symbols.push_back(info);
  d.by_name.emplace(info.name, info.id);
  d.radical_ids.push_back(info.id);
  d.radical_count.fetch_add(1);
  return info.id;
}

std::vector<SymbolId> SymbolTable::radicals() const {
  auto& d = impl();
  std::shared_lock lock(d.mutex);
  return d.radical_ids;
}

std::string symbol_name(SymbolId id) { return SymbolTable::instance().info(id).name; }

namespace {

bool any_radicals_registered() { return SymbolTable::instance().has_radicals(); }

bool poly_has_radicals(const MPoly& p) {
  if (!any_radicals_registered()) return false;
  auto& table = SymbolTable::instance();
  for (SymbolId id : p.symbols())
    if (table.is_radical(id)) return true;
  return false;
}

// Rewrite u^e with e >= deg(u) using u^deg -> radicand until every exponent is
// below its degree.
MPoly reduce_radicals(const MPoly& p) {
  if (!any_radicals_registered()) return p;
  auto& table = SymbolTable::instance();
  bool needed = false;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [id, e] : m.entries()) {
      const auto& inf = table.info(id);
      if (inf.kind == SymbolKind::Radical && e >= static_cast<std::uint32_t>(inf.degree)) needed = true;
    }
  }
  if (!needed) return p;
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    MPoly factor(1);
    Monomial rest = m;
    for (const auto& [id, e] : m.entries()) {
      const auto& inf = table.info(id);
      if (inf.kind != SymbolKind::Radical) continue;
      const auto k = static_cast<std::uint32_t>(inf.degree);
      if (e < k) continue;
      rest = rest.with_exponent(id, e % k);
      factor = factor * inf.radicand.pow(e / k);
    }
    out += MPoly::term(rest, c) * factor;
  }
  return reduce_radicals(out);
}

int poly_order(const MPoly& p) {
  std::int64_t n = 1;
  for (const auto& [m, c] : p.terms()) n = lcm64(n, c.order());
  return static_cast<int>(n);
}

MPoly lift_poly(const MPoly& p, int m) {
  return p.map_coefficients([m](const Monomial&, const Cyclotomic& c) { return c.lift(m); });
}

MPoly conjugate_poly(const MPoly& p, SymbolId radical, int degree, std::int64_t j) {
  return p.map_coefficients([&](const Monomial& mono, const Cyclotomic& c) {
    const std::uint32_t e = mono.exponent(radical);
    if (e == 0) return c;
    return c * Cyclotomic::root_of_unity(degree, j * static_cast<std::int64_t>(e));
  });
}

Cyclotomic simplest_root_of_unity(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = gcd64(num, den);
  if (num == 0) return Cyclotomic(1);
  return Cyclotomic::root_of_unity(static_cast<int>(den / g), num / g);
}

}  // namespace

FieldElem normal_form(const MPoly& num_in, const MPoly& den_in) {
  if (den_in.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (poly_has_radicals(den_in)) return FieldElem(num_in) * FieldElem(den_in).inverse();
  MPoly num = reduce_radicals(num_in);
  if (num.is_zero()) return FieldElem();
  MPoly den = den_in;
  if (den.is_constant()) {
    const Cyclotomic inv = den.constant_term().inverse();
    return FieldElem(num.scaled(inv), MPoly(1), FieldElem::Normalized{});
  }
  MPoly g = gcd(num, den);
  if (!g.is_constant()) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  const Cyclotomic inv = den.leading_coefficient().inverse();
  if (den.is_constant()) return FieldElem(num.scaled(inv), MPoly(1), FieldElem::Normalized{});
  return FieldElem(num.scaled(inv), den.scaled(inv), FieldElem::Normalized{});
}

FieldElem::FieldElem(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (den_.is_constant() && !poly_has_radicals(den_)) {
    const Cyclotomic d = den_.constant_term();
    num_ = reduce_radicals(num_);
    if (!d.is_one()) num_ = num_.scaled(d.inverse());
    den_ = MPoly(1);
  } else {
    *this = normal_form(num, den);
  }
}

FieldElem FieldElem::parameter(const std::string& name) {
  return FieldElem(MPoly::var(SymbolTable::instance().parameter(name)));
}

FieldElem FieldElem::symbol(SymbolId id) {
  (void)SymbolTable::instance().info(id);
  return FieldElem(MPoly::var(id));
}

bool FieldElem::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term().is_one(); }

Cyclotomic FieldElem::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "element is not constant");
  return num_.constant_term();
}

bool FieldElem::is_rational() const { return is_constant() && num_.constant_term().is_rational(); }

bool FieldElem::has_radicals() const { return poly_has_radicals(num_); }

std::vector<SymbolId> FieldElem::symbols() const {
  auto a = num_.symbols();
  auto b = den_.symbols();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

int FieldElem::cyclotomic_order() const {
  return static_cast<int>(lcm64(poly_order(num_), poly_order(den_)));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_constant() && b.den_.is_constant())
    return FieldElem(a.num_ + b.num_, MPoly(1), FieldElem::Normalized{});
  if (a.den_ == b.den_) return normal_form(a.num_ + b.num_, a.den_);
  return normal_form(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  if (a.den_.is_constant() && b.den_.is_constant())
    return FieldElem(reduce_radicals(a.num_ * b.num_), MPoly(1), FieldElem::Normalized{});
  return normal_form(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (!poly_has_radicals(num_)) return normal_form(den_, num_);
  auto& table = SymbolTable::instance();
  MPoly n = num_;
  MPoly acc(1);
  while (true) {
    std::optional<SymbolId> pick;
    for (SymbolId id : n.symbols())
      if (table.is_radical(id)) pick = id;
    if (!pick) break;
    const auto& inf = table.info(*pick);
    const int k = inf.degree;
    const int m = static_cast<int>(lcm64(poly_order(n), k));
    n = lift_poly(n, m);
    MPoly conj(1);
    for (int j = 1; j < k; ++j) conj = reduce_radicals(conj * conjugate_poly(n, *pick, k, j));
    MPoly norm = reduce_radicals(n * conj);
    if (norm.is_zero())
      fail(ErrorKind::UnsupportedExtension, "zero divisor under the registered radical rules");
    if (norm.has_symbol(*pick))
      fail(ErrorKind::UnsupportedExtension, "radical norm did not eliminate " + inf.name);
    acc = reduce_radicals(acc * conj);
    n = norm;
  }
  return normal_form(den_ * acc, n);
}

FieldElem field_div(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (a.is_zero()) return FieldElem();
  return a * b.inverse();
}

FieldElem FieldElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result(1);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElem FieldElem::derivative(SymbolId param) const {
  auto& table = SymbolTable::instance();
  auto poly_derivative = [&](const MPoly& p) {
    FieldElem d(p.derivative(param));
    for (SymbolId id : p.symbols()) {
      const auto& inf = table.info(id);
      if (inf.kind != SymbolKind::Radical || !inf.radicand.has_symbol(param)) continue;
      // du/dp = u * r_p / (k r)
      FieldElem du = FieldElem(MPoly::var(id)) * FieldElem(inf.radicand.derivative(param)) /
                     FieldElem(inf.radicand.scaled(Cyclotomic(static_cast<long>(inf.degree))));
      d += FieldElem(p.derivative(id)) * du;
    }
    return d;
  };
  const FieldElem dn = poly_derivative(num_);
  if (den_.is_constant()) return dn / FieldElem(den_);
  const FieldElem dd(den_.derivative(param));
  const FieldElem n(num_);
  const FieldElem d(den_);
  return (dn * d - n * dd) / (d * d);
}

FieldElem FieldElem::lift(int m) const { return FieldElem(lift_poly(num_, m), lift_poly(den_, m), Normalized{}); }

FieldElem FieldElem::conjugate(SymbolId radical, std::int64_t j) const {
  const auto& inf = SymbolTable::instance().info(radical);
  return normal_form(conjugate_poly(num_, radical, inf.degree, j), den_);
}

std::string FieldElem::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const MPoly& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::vector<FieldElem> lift_cyclotomic_order(const std::vector<FieldElem>& elements, int m) {
  std::vector<FieldElem> out;
  out.reserve(elements.size());
  for (const auto& e : elements) {
    if (m % e.cyclotomic_order() != 0)
      fail(ErrorKind::InvalidArgument, "target order is not a multiple of the element order");
    out.push_back(e.lift(m));
  }
  return out;
}

namespace {

// k-th root of a single-term constant q*zeta_N^i when |q| is a perfect power.
std::optional<Cyclotomic> constant_root(const Cyclotomic& c, int k) {
  if (c.term_count() != 1) return std::nullopt;
  std::size_t idx = 0;
  while (c.coeffs()[idx] == 0) ++idx;
  const Rational& q = c.coeffs()[idx];
  auto mag = exact_root(abs(q), k);
  if (!mag) return std::nullopt;
  const std::int64_t n = c.order();
  // zeta_{2Nk}^{2i + (q<0 ? N : 0)}
  const std::int64_t e = 2 * static_cast<std::int64_t>(idx) + (q < 0 ? n : 0);
  return Cyclotomic(*mag) * simplest_root_of_unity(e, 2 * n * k);
}

std::optional<FieldElem> perfect_power_root(const FieldElem& r, int k) {
  if (!r.num().is_monomial() || !r.den().is_monomial()) return std::nullopt;
  const Monomial& mn = r.num().leading_monomial();
  const Monomial& md = r.den().leading_monomial();
  std::vector<Monomial::Entry> rn, rd;
  for (const auto& [id, e] : mn.entries()) {
    if (e % static_cast<std::uint32_t>(k) != 0) return std::nullopt;
    rn.push_back({id, e / static_cast<std::uint32_t>(k)});
  }
  for (const auto& [id, e] : md.entries()) {
    if (e % static_cast<std::uint32_t>(k) != 0) return std::nullopt;
    rd.push_back({id, e / static_cast<std::uint32_t>(k)});
  }
  auto c = constant_root(r.num().leading_coefficient() / r.den().leading_coefficient(), k);
  if (!c) return std::nullopt;
  return normal_form(MPoly::term(Monomial(rn), *c), MPoly::term(Monomial(rd), Cyclotomic(1)));
}

}  // namespace

RadicalRoot adjoin_radical(const FieldElem& radicand, int k) {
  if (k < 2) fail(ErrorKind::InvalidArgument, "radical degree must be at least 2");
  if (radicand.is_zero()) fail(ErrorKind::InvalidArgument, "radicand must be nonzero");
  if (radicand.has_radicals())
    fail(ErrorKind::UnsupportedExtension, "nested radical over " + radicand.to_string());
  if (radicand.is_constant() && radicand.constant_value().root_of_unity_exponent() >= 0)
    fail(ErrorKind::UnsupportedExtension, "radicand " + radicand.to_string() + " is a root of unity; use zeta_N");
  if (auto root = perfect_power_root(radicand, k)) return {*root, std::nullopt};
  // u^k = num * den^(k-1); root = u / den.
  const MPoly poly = radicand.num() * radicand.den().pow(static_cast<std::uint32_t>(k - 1));
  const SymbolId id = SymbolTable::instance().radical(poly, k);
  return {FieldElem(MPoly::var(id)) / FieldElem(radicand.den()), id};
}

FieldElem principal_root(const FieldElem& r, int k) {
  if (k == 1) return r;
  if (r.is_zero()) fail(ErrorKind::InvalidArgument, "root of zero");
  if (r.is_constant() && r.constant_value().root_of_unity_exponent() >= 0) {
    const Cyclotomic c = r.constant_value();
    const std::int64_t e = c.root_of_unity_exponent();
    return FieldElem(simplest_root_of_unity(e, 2LL * c.order() * k));
  }
  return adjoin_radical(r, k).value;
}

}  // namespace lipsat
