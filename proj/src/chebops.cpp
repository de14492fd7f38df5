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


#include "sl3web/chebops.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sl3web/superimpose.hpp"

namespace sl3web {

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, v] : o.c) {
    c[m] += v;
    if (c[m] == 0) c.erase(m);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += o.scaled(-1); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [m, v] : c)
    for (const auto& [n, u] : o.c) {
      auto key = std::make_pair(m.first + n.first, m.second + n.second);
      r.c[key] += v * u;
      if (r.c[key] == 0) r.c.erase(key);
    }
  return r;
}

BiPoly BiPoly::scaled(int64_t s) const {
  BiPoly r;
  if (s == 0) return r;
  for (const auto& [m, v] : c) r.c[m] = v * s;
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [m, v] : c)
    if (m.first > 0) r.c[{m.first - 1, m.second}] = v * m.first;
  return r;
}

std::string BiPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    auto [m, v] = *it;
    int64_t a = v < 0 ? -v : v;
    if (first) {
      if (v < 0) o << "-";
    } else {
      o << (v < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = m.first == 0 && m.second == 0;
    if (a != 1 || unit) o << a;
    if (m.first) o << "x" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.second) o << "y" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
  }
  return o.str();
}

BiPoly BiPoly::x() {
  BiPoly r;
  r.c[{1, 0}] = 1;
  return r;
}

BiPoly BiPoly::y() {
  BiPoly r;
  r.c[{0, 1}] = 1;
  return r;
}

BiPoly BiPoly::constant(int64_t v) {
  BiPoly r;
  if (v) r.c[{0, 0}] = v;
  return r;
}

ChebPoly cheb(ChebKind kind, int k) {
  if (k < 0) throw WebError("Chebyshev index must be nonnegative");
  BiPoly a = BiPoly::constant(kind == ChebKind::First ? 2 : 1), b = BiPoly::x();
  if (k == 0) return {kind, 0, a};
  for (int i = 2; i <= k; ++i) {
    BiPoly n = BiPoly::x() * b;
    n -= BiPoly::y() * a;
    a = b;
    b = n;
  }
  return {kind, k, b};
}

ChebPoly chebT(int k) { return cheb(ChebKind::First, k); }
ChebPoly chebU(int k) { return cheb(ChebKind::Second, k); }

namespace {

int64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  int64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace

BiPoly ChebCombination::expand() const {
  BiPoly r;
  for (const auto& [jm, v] : terms) {
    BiPoly ym;
    ym.c[{0, jm.second}] = v;
    r += ym * cheb(kind, jm.first).p;
  }
  return r;
}

bool ChebCombination::positive() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second > 0; });
}

std::string ChebCombination::str() const {
  std::ostringstream o;
  const char* name = kind == ChebKind::First ? "T" : "U";
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [jm, v] = *it;
    if (!first) o << " + ";
    first = false;
    if (v != 1) o << v;
    if (jm.second) o << "y" << (jm.second > 1 ? "^" + std::to_string(jm.second) : "");
    o << name << jm.first;
  }
  return o.str();
}

ChebCombination monomialInCheb(int k, ChebKind kind) {
  if (k < 1) throw WebError("monomial degree must be positive");
  ChebCombination r{kind, {}};
  for (int i = 0; 2 * i <= k; ++i) {
    int j = k - 2 * i;
    int64_t v;
    if (kind == ChebKind::First) {
      v = binom(k, i);
      if (j == 0) v /= 2;
    } else {
      v = binom(k, i) - binom(k, i - 1);
    }
    if (v) r.terms[{j, i}] = v;
  }
  return r;
}

WebCombo unitCombo(long c) {
  WebCombo r;
  r.add(emptyWeb(), LaurentPoly(c));
  return r;
}

WebCombo comboOf(const Web& w) {
  WebCombo r;
  r.add(w, LaurentPoly(1));
  return r;
}

WebCombo comboProduct(const WebCombo& a, const WebCombo& b) {
  WebCombo r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const Web& wa = a.webs.at(ka);
      const Web& wb = b.webs.at(kb);
      LaurentPoly c = ca * cb;
      if (wa.numVertices() == 0) {
        r.add(kb, wb, c);
      } else if (wb.numVertices() == 0) {
        r.add(ka, wa, c);
      } else {
        r += reduceToBasis(superimpose({wa, wb})).scaled(c);
      }
    }
  return r;
}

WebCombo combosEvaluate(const BiPoly& p, const WebCombo& x, const WebCombo& y) {
  std::map<std::pair<int, int>, WebCombo> memo;
  memo[{0, 0}] = unitCombo();
  std::function<const WebCombo&(int, int)> power = [&](int i, int j) -> const WebCombo& {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    WebCombo v = i > 0 ? comboProduct(power(i - 1, j), x) : comboProduct(power(i, j - 1), y);
    return memo[{i, j}] = v;
  };
  WebCombo r;
  for (const auto& [m, v] : p.c) r += power(m.first, m.second).scaled(LaurentPoly(static_cast<long>(v)));
  return r;
}

int cycleCount(const Web& w) { return static_cast<int>(internalFaces(unclasp(w)).size()); }

void requireSingleCycle(const Web& w) {
  if (!isNonElliptic(w)) throw WebError("web is not non-elliptic");
  if (cycleCount(w) != 1) throw WebError("web does not have exactly one internal cycle");
  auto cyc = internalFaces(w);
  std::vector<uint8_t> onCycle(w.numHalfEdges(), 0);
  for (const auto& f : cyc)
    for (int h : f) onCycle[h] = onCycle[w.twin[h]] = 1;
  FaceSet fs = facesOf(w);
  for (size_t f = 0; f < fs.faces.size(); ++f) {
    if (fs.internal[f] || fs.faces[f].size() != 4) continue;
    int bverts = 0;
    bool touches = false;
    for (int h : fs.faces[f]) {
      bverts += w.isBoundary(w.hv[h]);
      touches |= onCycle[h] != 0;
    }
    if (bverts == 1 && touches)
      throw WebError("boundary quadrilateral on the cycle; the bracelet invariants vanish");
  }
}

Web thick(const Web& w, int k) {
  if (k < 1) throw WebError("thickening needs k >= 1");
  if (k == 1) return w;
  std::vector<Web> copies(k, w);
  WebCombo r = reduceToBasis(superimpose(copies));
  if (r.size() != 1 || r.terms.begin()->second != LaurentPoly(1))
    throw WebError("superimposed copies do not reduce to a single web");
  return r.webs.begin()->second;
}

WebCombo bracelet(const Web& w, int k) {
  if (k < 0) throw WebError("bracelet index must be nonnegative");
  if (k == 0) return unitCombo(2);
  requireSingleCycle(w);
  if (k == 1) return comboOf(w);
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = (i + 1) % k;
  return reduceToBasis(permutedCable(w, k, perm));
}

WebCombo band(const Web& w, int k) {
  if (k < 0) throw WebError("band index must be nonnegative");
  if (k == 0) return unitCombo(1);
  requireSingleCycle(w);
  if (k == 1) return comboOf(w);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  WebCombo sum;
  long count = 0;
  do {
    sum += reduceToBasis(permutedCable(w, k, perm));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum.scaled(LaurentPoly(mpq_class(1, count)));
}

WebCombo coefficientWebB(const Web& w) {
  requireSingleCycle(w);
  WebCombo sq = reduceToBasis(superimpose({w, w}));
  sq += bracelet(w, 2).scaled(LaurentPoly(-1));
  return sq.scaled(LaurentPoly(mpq_class(1, 2)));
}

namespace {

std::string firstDiff(const WebCombo& a, const WebCombo& b) {
  for (const auto& [k, c] : a.terms) {
    auto it = b.terms.find(k);
    if (it == b.terms.end() || it->second != c)
      return "term " + k.substr(0, 24) + " has " + c.toString() + " vs " +
             (it == b.terms.end() ? std::string("0") : it->second.toString());
  }
  for (const auto& [k, c] : b.terms)
    if (!a.terms.count(k)) return "term " + k.substr(0, 24) + " has 0 vs " + c.toString();
  return "";
}

ChebReport verify(const Web& w, int kmax, ChebKind kind) {
  ChebReport rep;
  WebCombo x = comboOf(w);
  WebCombo y = coefficientWebB(w);
  for (int k = 0; k <= kmax; ++k) {
    WebCombo lhs = kind == ChebKind::First ? bracelet(w, k) : band(w, k);
    WebCombo rhs = combosEvaluate(cheb(kind, k).p, x, y);
    bool ok = lhs == rhs;
    std::string d = ok ? "" : firstDiff(lhs, rhs);
    rep.lines.push_back("k=" + std::to_string(k) + " " + (ok ? "OK" : "MISMATCH") + " terms=" +
                        std::to_string(lhs.size()) + (ok ? "" : " " + d));
    if (!ok && rep.ok) rep.firstDifference = "k=" + std::to_string(k) + ": " + d;
    rep.ok &= ok;
  }
  return rep;
}

}  // namespace

ChebReport verifyBracelet(const Web& w, int kmax) { return verify(w, kmax, ChebKind::First); }
ChebReport verifyBand(const Web& w, int kmax) { return verify(w, kmax, ChebKind::Second); }

}  // namespace sl3web
