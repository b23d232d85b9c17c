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

#include "lipsat/expr.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "lipsat/errors.hpp"

namespace lipsat {

bool operator==(const PolyExpr& a, const PolyExpr& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
}

namespace {

PolyExpr node(PolyExpr::Kind k, std::vector<PolyExpr> args) {
  PolyExpr e;
  e.kind = k;
  e.args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  PolyExpr parse() {
    PolyExpr e = expr();
    skip();
    if (pos_ != s_.size()) error("'+', '-', '*', '^' or end of input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& expected) {
    std::string got = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    fail(ErrorKind::ParseError, "at position " + std::to_string(pos_) + ": expected " + expected + ", got " + got);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyExpr expr() {
    PolyExpr e = accept('-') ? node(PolyExpr::Kind::Neg, {term()}) : term();
    for (;;) {
      if (accept('+')) {
        e = node(PolyExpr::Kind::Add, {std::move(e), term()});
      } else if (accept('-')) {
        e = node(PolyExpr::Kind::Sub, {std::move(e), term()});
      } else {
        return e;
      }
    }
  }

  PolyExpr term() {
    PolyExpr e = factor();
    while (accept('*')) e = node(PolyExpr::Kind::Mul, {std::move(e), factor()});
    return e;
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (!accept('^')) return b;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("a nonnegative integer exponent");
    if (pos_ - start > 6) error("an exponent below 10^6");
    PolyExpr e = node(PolyExpr::Kind::Pow, {std::move(b)});
    e.exponent = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    return e;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  PolyExpr base() {
    skip();
    if (accept('(')) {
      PolyExpr e = expr();
      if (!accept(')')) error("')'");
      return e;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      PolyExpr e;
      e.kind = PolyExpr::Kind::Number;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) error("a denominator");
        if (Integer(den) == 0) fail(ErrorKind::ParseError, "at position " + std::to_string(pos_) + ": zero denominator");
        e.value = Rational(Integer(num), Integer(den));
        e.value.canonicalize();
      } else {
        e.value = Rational(Integer(num));
      }
      return e;
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      PolyExpr e;
      e.kind = PolyExpr::Kind::Ident;
      e.name = s_.substr(start, pos_ - start);
      return e;
    }
    error("a number, an identifier or '('");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// binding strength: sums 1, products 2, powers 3, atoms 4
int strength(const PolyExpr& e) {
  switch (e.kind) {
    case PolyExpr::Kind::Add:
    case PolyExpr::Kind::Sub:
    case PolyExpr::Kind::Neg:
      return 1;
    case PolyExpr::Kind::Mul:
      return 2;
    case PolyExpr::Kind::Pow:
      return 3;
    case PolyExpr::Kind::Number:
      return e.value.get_den() == 1 ? 4 : 2;
    case PolyExpr::Kind::Ident:
      break;
  }
  return 4;
}

std::string wrap(const PolyExpr& e, bool paren) { return paren ? "(" + to_string(e) + ")" : to_string(e); }

std::optional<int> zeta_order(const std::string& name) {
  if (name.rfind("zeta_", 0) != 0 || name.size() == 5) return std::nullopt;
  for (std::size_t i = 5; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  if (name.size() > 9) fail(ErrorKind::ParseError, "root of unity order too large: " + name);
  const int n = std::stoi(name.substr(5));
  if (n < 1) fail(ErrorKind::ParseError, "root of unity order must be positive: " + name);
  return n;
}

}  // namespace

PolyExpr parse_poly(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const PolyExpr& e) {
  using K = PolyExpr::Kind;
  switch (e.kind) {
    case K::Number:
      return e.value.get_str();
    case K::Ident:
      return e.name;
    case K::Neg:
      // the operand is a term, so only sums need parentheses
      return "-" + wrap(e.args[0], strength(e.args[0]) < 2);
    case K::Add:
    case K::Sub:
      return to_string(e.args[0]) + (e.kind == K::Add ? " + " : " - ") +
             wrap(e.args[1], strength(e.args[1]) < 2);
    case K::Mul:
      return wrap(e.args[0], strength(e.args[0]) < 2) + "*" + wrap(e.args[1], strength(e.args[1]) < 3 &&
                                                                                   !(e.args[1].kind == K::Number));
    case K::Pow:
      return wrap(e.args[0], strength(e.args[0]) < 4) + "^" + std::to_string(e.exponent);
  }
  return "";
}

BiPoly to_bipoly(const PolyExpr& e) {
  using K = PolyExpr::Kind;
  switch (e.kind) {
    case K::Number:
      return BiPoly(FieldElem(e.value));
    case K::Ident:
      if (e.name == "x") return BiPoly::x();
      if (e.name == "y") return BiPoly::y();
      if (const auto n = zeta_order(e.name)) return BiPoly(FieldElem::root_of_unity(*n, 1));
      return BiPoly(FieldElem::parameter(e.name));
    case K::Neg:
      return -to_bipoly(e.args[0]);
    case K::Add:
      return to_bipoly(e.args[0]) + to_bipoly(e.args[1]);
    case K::Sub:
      return to_bipoly(e.args[0]) - to_bipoly(e.args[1]);
    case K::Mul:
      return to_bipoly(e.args[0]) * to_bipoly(e.args[1]);
    case K::Pow:
      return to_bipoly(e.args[0]).pow(static_cast<int>(e.exponent));
  }
  return BiPoly();
}

BiPoly parse_bipoly(const std::string& text) { return to_bipoly(parse_poly(text)); }

FieldElem parse_constant(const std::string& text) {
  const BiPoly p = parse_bipoly(text);
  for (const auto& [k, c] : p.terms())
    if (k != std::pair<int, int>{0, 0}) fail(ErrorKind::ParseError, "expected a constant, got " + text);
  return p.coeff(0, 0);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct SeriesTerm {
  FieldElem coeff;
  Rational exponent;
};

// exponent text after "t^": n, (n), (n/d)
Rational parse_exponent(const std::string& text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  const auto slash = s.find('/');
  auto integer = [&](const std::string& d) {
    const std::string t = trim(d);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::ParseError, "bad exponent '" + text + "'");
    return Integer(t);
  };
  if (slash == std::string::npos) return Rational(integer(s));
  const Integer den = integer(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in exponent '" + text + "'");
  Rational r(integer(s.substr(0, slash)), den);
  r.canonicalize();
  return r;
}

SeriesTerm parse_series_term(const std::string& chunk) {
  const std::string s = trim(chunk);
  if (s.empty()) fail(ErrorKind::ParseError, "empty series term");
  // split off the trailing t or t^e at depth 0
  int depth = 0;
  std::optional<std::size_t> tpos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == 't' && (i == 0 || s[i - 1] == '*' || std::isspace(static_cast<unsigned char>(s[i - 1]))) &&
        (i + 1 == s.size() || s[i + 1] == '^' || std::isspace(static_cast<unsigned char>(s[i + 1]))))
      tpos = i;
  }
  if (!tpos) return {parse_constant(s), Rational(0)};
  std::string coef = trim(s.substr(0, *tpos));
  if (!coef.empty()) {
    if (coef.back() != '*') fail(ErrorKind::ParseError, "expected '*' before t in '" + s + "'");
    coef = trim(coef.substr(0, coef.size() - 1));
  }
  const std::string rest = trim(s.substr(*tpos + 1));
  Rational e(1);
  if (!rest.empty()) {
    if (rest.front() != '^') fail(ErrorKind::ParseError, "unexpected text after t in '" + s + "'");
    e = parse_exponent(rest.substr(1));
  }
  return {coef.empty() ? FieldElem(1) : parse_constant(coef), e};
}

std::vector<SeriesTerm> parse_series_terms(const std::string& text) {
  std::vector<SeriesTerm> out;
  int depth = 0;
  std::string cur;
  bool negative = false, started = false;
  auto flush = [&]() {
    if (trim(cur).empty()) {
      if (started) fail(ErrorKind::ParseError, "dangling sign in '" + text + "'");
      return;
    }
    SeriesTerm t = parse_series_term(cur);
    if (negative) t.coeff = -t.coeff;
    out.push_back(t);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    // a sign directly after '^' belongs to the exponent and is rejected there
    const bool exponent_sign = !trim(cur).empty() && trim(cur).back() == '^';
    if (depth == 0 && (c == '+' || c == '-') && !exponent_sign) {
      flush();
      cur.clear();
      negative = c == '-';
      started = true;
      continue;
    }
    cur += c;
  }
  flush();
  if (out.empty()) fail(ErrorKind::ParseError, "empty series '" + text + "'");
  return out;
}

}  // namespace

PairCurve parse_pair_line(const std::string& line) {
  std::map<std::string, std::vector<SeriesTerm>> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (trim(item).empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParseError, "expected key=value in '" + trim(item) + "'");
    const std::string key = trim(item.substr(0, eq));
    if (key != "x1" && key != "y1" && key != "x2" && key != "y2")
      fail(ErrorKind::ParseError, "unknown key '" + key + "'");
    if (parts.count(key)) fail(ErrorKind::ParseError, "duplicate key '" + key + "'");
    parts[key] = parse_series_terms(item.substr(eq + 1));
  }
  for (const char* k : {"x1", "y1", "x2", "y2"})
    if (!parts.count(k)) fail(ErrorKind::ParseError, std::string("missing ") + k);
  // common ramification of all four components
  std::int64_t ram = 1;
  for (const auto& [k, terms] : parts)
    for (const auto& t : terms) {
      if (t.exponent < 0) fail(ErrorKind::ParseError, "negative exponent in " + k);
      ram = lcm64(ram, t.exponent.get_den().get_si());
    }
  auto build = [&](const std::string& k) {
    std::map<std::int64_t, FieldElem> m;
    for (const auto& t : parts[k]) {
      const Rational scaled = t.exponent * Rational(static_cast<long>(ram));
      const std::int64_t e = scaled.get_num().get_si();
      auto it = m.try_emplace(e).first;
      it->second += t.coeff;
    }
    const PuiseuxSeries s = PuiseuxSeries::from_terms(m, ram);
    const OrderValue o = s.order();
    if (!o.is_infinite() && o.value <= 0) fail(ErrorKind::ParseError, k + " does not pass through the origin");
    return s;
  };
  PairCurve p;
  p.x1 = build("x1");
  p.y1 = build("y1");
  p.x2 = build("x2");
  p.y2 = build("y2");
  if (p.x1 == p.x2 && p.y1 == p.y2) fail(ErrorKind::InvalidArgument, "the two curves of a pair must differ");
  return p;
}

std::vector<PairCurve> parse_pairs(const std::string& text) {
  std::vector<PairCurve> out;
  std::stringstream ss(text);
  std::string line;
  int n = 0;
  while (std::getline(ss, line)) {
    ++n;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(parse_pair_line(t));
    } catch (const Error& e) {
      fail(e.kind(), "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::vector<PairCurve> parse_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read pairs file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pairs(buf.str());
}

}  // namespace lipsat
