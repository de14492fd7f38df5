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

#ifndef SL3WEB_SUPERIMPOSE_HPP_
#define SL3WEB_SUPERIMPOSE_HPP_

#include <vector>

#include "sl3web/layout.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// How copies share the boundary circle. Every web has the same number of
// boundary points; point j of each copy lands on clasp j.
struct SuperimposePlan {
  double shrink = 0.11;  // radial scale step between consecutive copies
  double turn = 0.043;   // angular step between consecutive copies (radians)
  bool unclaspResult = false;
};

struct Overlay {
  Drawing drawing;
  std::vector<std::vector<int>> vertexOf;  // copy -> web vertex -> drawing vertex
  std::vector<std::vector<int>> edgeOf;    // copy -> web half-edge -> drawing edge
};

Overlay overlay(const std::vector<Web>& webs, const SuperimposePlan& plan);
Web superimpose(const std::vector<Web>& webs, const SuperimposePlan& plan = {});

// Cable of k copies with one cycle edge rewired by a permutation of the copies.
Web permutedCable(const Web& w, int k, const std::vector<int>& perm, int cutHalfEdge = -1);
int defaultCycleHalfEdge(const Web& w);

// D1 ∪ D2: superimpose without crossings and unclasp every endpoint.
Web cupUnion(const std::vector<Web>& webs);

}  // namespace sl3web

#endif  // SL3WEB_SUPERIMPOSE_HPP_
