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


#ifndef SL3WEB_CHEBOPS_HPP_
#define SL3WEB_CHEBOPS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl3web/skein.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

enum class ChebKind { First, Second };

// Integer polynomial in x, y; (i, j) means x^i y^j.
struct BiPoly {
  std::map<std::pair<int, int>, int64_t> c;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scaled(int64_t s) const;
  BiPoly dx() const;
  bool operator==(const BiPoly& o) const { return c == o.c; }
  std::string str() const;
  static BiPoly x();
  static BiPoly y();
  static BiPoly constant(int64_t v);
};

struct ChebPoly {
  ChebKind kind;
  int k;
  BiPoly p;
};

// T_k = x T_{k-1} - y T_{k-2}, T_0 = 2, T_1 = x; U likewise with U_0 = 1.
ChebPoly chebT(int k);
ChebPoly chebU(int k);
ChebPoly cheb(ChebKind kind, int k);

// x^k as sum of coeff * y^m * P_j; key (j, m).
struct ChebCombination {
  ChebKind kind;
  std::map<std::pair<int, int>, int64_t> terms;
  BiPoly expand() const;
  bool positive() const;
  std::string str() const;
};
ChebCombination monomialInCheb(int k, ChebKind kind);

// Products of invariants are superimpositions, reduced in the commutative skein.
WebCombo comboProduct(const WebCombo& a, const WebCombo& b);
WebCombo comboOf(const Web& w);
WebCombo unitCombo(long c = 1);
WebCombo combosEvaluate(const BiPoly& p, const WebCombo& x, const WebCombo& y);

// Rejects webs without exactly one internal cycle, and webs with a
// quadrilateral on the cycle that has a vertex on the boundary.
void requireSingleCycle(const Web& w);
int cycleCount(const Web& w);

Web thick(const Web& w, int k);
WebCombo bracelet(const Web& w, int k);
WebCombo band(const Web& w, int k);
WebCombo coefficientWebB(const Web& w);

struct ChebReport {
  bool ok = true;
  std::vector<std::string> lines;  // one per k
  std::string firstDifference;
};
ChebReport verifyBracelet(const Web& w, int kmax);
ChebReport verifyBand(const Web& w, int kmax);

}  // namespace sl3web

#endif  // SL3WEB_CHEBOPS_HPP_
