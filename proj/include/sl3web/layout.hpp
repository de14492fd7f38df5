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

#ifndef SL3WEB_LAYOUT_HPP_
#define SL3WEB_LAYOUT_HPP_

#include <cstdint>
#include <vector>

#include "sl3web/web.hpp"

namespace sl3web {

struct Pt {
  double x = 0, y = 0;
};

// Straight-line drawing with optional bend points. Boundary vertices lie on
// a circle around `center`; the boundary list runs clockwise.
struct Drawing {
  struct Vtx {
    VertexKind kind;
    Color color;
    Pt p;
  };
  struct Edge {
    int a, b;
    std::vector<Pt> bends;
    int layer = 0;
  };
  std::vector<Vtx> verts;
  std::vector<Edge> edges;
  std::vector<int> boundary;
  Pt center;
  int loops = 0;

  int addVertex(VertexKind k, Color c, Pt p) {
    verts.push_back({k, c, p});
    return static_cast<int>(verts.size()) - 1;
  }
  int addEdge(int a, int b, std::vector<Pt> bends = {}, int layer = 0) {
    edges.push_back({a, b, std::move(bends), layer});
    return static_cast<int>(edges.size()) - 1;
  }
};

// Builds the rotation system from a drawing, inserting a crossing vertex
// at every transversal intersection. Throws WebError on degenerate input.
Web webFromDrawing(const Drawing& d);

struct Layout {
  std::vector<Pt> vpos;  // per vertex
  std::vector<Pt> mid;   // per half-edge, shared with its twin
};

enum class LayoutFrame {
  Disc,       // boundary points evenly on the unit circle, clockwise
  UpperHalf,  // boundary points on the upper semicircle, left to right
};

// Barycentric drawing of a crossing-free web whose components all reach the
// boundary. The result reproduces the rotation system exactly.
Layout tutteLayout(const Web& w, LayoutFrame frame, uint64_t seed = 1);
Layout tutteLayoutAt(const Web& w, const std::vector<Pt>& boundaryPos,
                     const std::vector<Pt>& dummyPos, uint64_t seed = 1);
Drawing drawingOf(const Web& w, const Layout& lay);
std::vector<Pt> boundaryPositions(int n, LayoutFrame frame);

}  // namespace sl3web

#endif  // SL3WEB_LAYOUT_HPP_
