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

#include "lipsat/upoly.hpp"

#include <algorithm>
#include <set>

#include "lipsat/errors.hpp"

namespace lipsat {

UPoly::UPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem();
  return c_[static_cast<std::size_t>(i)];
}

FieldElem UPoly::eval(const FieldElem& z) const {
  FieldElem acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<FieldElem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * FieldElem(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElem inv = lead().inverse();
  std::vector<FieldElem> d;
  d.reserve(c_.size());
  for (const auto& c : c_) d.push_back(c * inv);
  return UPoly(std::move(d));
}

bool UPoly::is_binomial() const {
  if (degree() < 2 || c_[0].is_zero()) return false;
  for (std::size_t i = 1; i + 1 < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<FieldElem> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<FieldElem> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<FieldElem> rem = a.c_;
  const int db = b.degree();
  const FieldElem inv = b.lead().inverse();
  std::vector<FieldElem> quo(std::max(0, a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const FieldElem c = rem[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(0, std::min(a.degree() + 1, db))));
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string term = "(" + c_[i].to_string() + ")";
    if (i > 0) term += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    UPoly::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() < 1) return out;
  UPoly r;
  const UPoly a = p.monic();
  const UPoly da = a.derivative();
  const UPoly c = gcd(a, da);
  UPoly w, y;
  UPoly::divmod(a, c, w, r);
  UPoly::divmod(da, c, y, r);
  UPoly z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    out.push_back(g);
    UPoly w2, y2;
    UPoly::divmod(w, g, w2, r);
    UPoly::divmod(z, g, y2, r);
    w = w2;
    z = y2 - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

std::vector<Integer> divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<Integer> small;
  std::vector<Integer> large;
  if (n == 0) return {};
  if (n > Integer("1000000000000"))
    fail(ErrorKind::UnsupportedExtension, "rational root search exceeds the divisor bound");
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool all_rational(const UPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_zero() && !c.is_rational()) return false;
  return true;
}

// Rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const UPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    Integer d = c.constant_value().rational().get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> ic;
  for (const auto& c : p.coeffs()) {
    Rational q = c.is_zero() ? Rational(0) : c.constant_value().rational();
    Rational s = q * Rational(den_lcm);
    ic.push_back(s.get_num());
  }
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  std::vector<Rational> roots;
  if (low + 1 >= ic.size()) return roots;
  for (const auto& num : divisors(ic[low])) {
    for (const auto& den : divisors(ic.back())) {
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        Rational acc = 0;
        for (std::size_t i = ic.size(); i-- > 0;) acc = acc * cand + Rational(ic[i]);
        if (acc == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void solve_squarefree(const UPoly& h, int mult, int b, std::vector<PolyRoot>& out) {
  if (h.degree() < 1) return;
  if (h.coeff(0).is_zero()) {
    // drop the zero root
    std::vector<FieldElem> c(h.coeffs().begin() + 1, h.coeffs().end());
    solve_squarefree(UPoly(std::move(c)), mult, b, out);
    return;
  }
  if (h.degree() == 1) {
    const FieldElem w = -(h.coeff(0) / h.coeff(1));
    out.push_back({principal_root(w, b), mult});
    return;
  }
  if (h.is_binomial()) {
    const int l = h.degree();
    const FieldElem rho = principal_root(-(h.coeff(0) / h.lead()), l * b);
    for (int s = 0; s < l; ++s) {
      FieldElem z = s == 0 ? rho : rho * FieldElem::root_of_unity(l * b, s);
      out.push_back({z, mult});
    }
    return;
  }
  if (all_rational(h)) {
    UPoly rest = h;
    for (const auto& r : rational_roots(h)) {
      out.push_back({principal_root(FieldElem(r), b), mult});
      UPoly q, rem;
      UPoly::divmod(rest, UPoly({FieldElem(-r), FieldElem(1)}), q, rem);
      rest = q;
    }
    if (rest.degree() == h.degree())
      fail(ErrorKind::UnsupportedExtension, "face polynomial " + h.to_string() + " has no supported factorization");
    solve_squarefree(rest, mult, b, out);
    return;
  }
  fail(ErrorKind::UnsupportedExtension, "face polynomial " + h.to_string() + " is neither linear nor binomial");
}

}  // namespace

std::vector<PolyRoot> solve_face(const UPoly& p, int b) {
  std::vector<PolyRoot> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i)
    solve_squarefree(factors[i], static_cast<int>(i) + 1, b, out);
  return out;
}

}  // namespace lipsat
