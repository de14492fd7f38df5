// Copyright 2026 The sl3web Authors.
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

#include "sl3web/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace sl3web {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const mpq_class& c) { addTerm(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, const mpq_class& c) {
  LaurentPoly p;
  p.addTerm(exponent, c);
  return p;
}

mpq_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int LaurentPoly::minExponent() const {
  if (terms_.empty()) throw std::logic_error("minExponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::maxExponent() const {
  if (terms_.empty()) throw std::logic_error("maxExponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::addTerm(int exponent, const mpq_class& c0) {
  if (sgn(c0) == 0) return;
  mpq_class c = c0;
  if (c.get_den() != 1) c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.addTerm(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
  return r;
}

mpq_class LaurentPoly::classicalLimit() const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : mpq_class(-c);
  return s;
}

bool LaurentPoly::negativeExponentOnly() const {
  for (const auto& [e, c] : terms_)
    if (e >= 0 || c.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::nonnegativeIntegral() const {
  for (const auto& [e, c] : terms_)
    if (sgn(c) < 0 || c.get_den() != 1) return false;
  return true;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpq_class c = it->second;
    if (!first) {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    } else if (sgn(c) < 0) {
      out += "-";
      c = abs(c);
    }
    first = false;
    if (it->first == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += "v";
      if (it->first != 1) out += "^" + std::to_string(it->first);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  LaurentPoly run() {
    LaurentPoly p;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      auto [e, c] = term();
      p.addTerm(e, sign * c);
      skip();
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("laurent parse: " + why + " at " + std::to_string(pos_));
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  std::pair<int, mpq_class> term() {
    mpq_class c = 1;
    bool haveCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        get();
        den = digits();
        if (den.empty() || den == "0" ) fail("bad denominator");
      }
      c = mpq_class(num + "/" + den);
      c.canonicalize();
      haveCoeff = true;
      skip();
      if (peek() != '*') return {0, c};
      get();
      skip();
    }
    if (peek() != 'v') {
      if (haveCoeff) fail("expected v after *");
      fail("expected term");
    }
    get();
    int e = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      bool neg = false;
      bool paren = false;
      if (peek() == '(' || peek() == '{') {
        paren = true;
        get();
      }
      if (peek() == '-') {
        neg = true;
        get();
      }
      std::string d = digits();
      if (d.empty()) fail("expected exponent");
      if (paren) {
        if (peek() != ')' && peek() != '}') fail("unclosed exponent");
        get();
      }
      e = std::stoi(d) * (neg ? -1 : 1);
    }
    return {e, c};
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) { return PolyParser(text).run(); }

LaurentPoly quantumInt(int n) {
  if (n < 0) throw std::invalid_argument("quantumInt requires n >= 0");
  // [n] = sum_{i=0}^{n-1} q^{(n-1)/2 - i}, with q^{1/2} = -v.
  LaurentPoly r;
  for (int i = 0; i < n; ++i) {
    int e = n - 1 - 2 * i;
    r.addTerm(e, (e % 2 == 0) ? 1 : -1);
  }
  return r;
}

}  // namespace sl3web
