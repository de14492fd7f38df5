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

#ifndef SL3WEB_QUANTUM_HPP_
#define SL3WEB_QUANTUM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl3web/laurent.hpp"
#include "sl3web/layout.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// Word over {1, 0, -1} in boundary order. std::vector<int> compares
// lexicographically with 1 > 0 > -1, which is the order used throughout.
using StateString = std::vector<int>;

struct Expansion {
  Signature signature;
  std::map<StateString, LaurentPoly> coeffs;

  LaurentPoly at(const StateString& j) const;
  bool operator==(const Expansion& o) const { return coeffs == o.coeffs; }
};

// A web drawn with every boundary leg continued up to a common top line,
// straight unless a route is given. Heights are generic.
struct HeightFrame {
  Web web;
  Layout layout;
  std::vector<Pt> top;                 // per boundary index
  std::vector<std::vector<Pt>> route;  // per boundary index, may be empty
};

HeightFrame heightFrame(const Web& w, uint64_t seed = 1);

// Per-edge flow: +1 runs from hv[h] to hv[twin[h]] for the representative
// half-edge h of the edge, -1 the other way, 0 unused.
struct Flow {
  std::vector<int> edgeHalf;  // representative half-edge per edge
  std::vector<int> dir;
  StateString state;
  int exponent = 0;  // the flow weight is v^exponent
};

Expansion expandByContraction(const Web& w, uint64_t seed = 1);
Expansion expandByFlows(const Web& w, uint64_t seed = 1);
LaurentPoly coefficientAt(const Web& w, const StateString& j, uint64_t seed = 1);
StateString dominantPath(const Web& w, uint64_t seed = 1);
// Every flow with boundary state j, optionally only those of weight v^exponent.
std::vector<Flow> flowsAt(const Web& w, const StateString& j, const int* exponent = nullptr,
                          uint64_t seed = 1);

// The same evaluators on an explicit frame.
Expansion expandByContraction(const HeightFrame& f);
Expansion expandByFlows(const HeightFrame& f);
std::vector<Flow> flowsAt(const HeightFrame& f, const StateString& j,
                          const int* exponent = nullptr);

// Local tensors, labels being tensor indices in {1, 0, -1}.
int cupExponent(int left);   // U: (j, -j) -> v^(j - 1)
int capExponent(int left);   // sigma: (j, -j) -> v^(1 + j)
int tExponent(int a, int b, int c);  // T: v^(-inversions)
// Vertex with up legs u (left to right) and down legs d (left to right)
// built from T and caps; returns false when the labels are not admissible.
bool vertexExponent(const std::vector<int>& up, const std::vector<int>& down, int* exponent);
// Y: input a from below, outputs (u1, u2). lambda: inputs (d1, d2), output up.
bool yWeight(int a, int u1, int u2, int* exponent);
bool lambdaWeight(int d1, int d2, int u, int* exponent);

bool leadingTermLaw(const Expansion& e, StateString* leader = nullptr);
bool nonnegative(const Expansion& e);

}  // namespace sl3web

#endif  // SL3WEB_QUANTUM_HPP_
