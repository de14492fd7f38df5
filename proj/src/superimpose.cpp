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

#include "sl3web/superimpose.hpp"

#include <cmath>

namespace sl3web {

Overlay overlay(const std::vector<Web>& webs, const SuperimposePlan& plan) {
  Overlay ov;
  if (webs.empty()) return ov;
  int n = webs[0].numBoundary();
  auto bpos = boundaryPositions(n, LayoutFrame::Disc);
  std::vector<int> slot(n);
  for (int j = 0; j < n; ++j)
    slot[j] = ov.drawing.addVertex(VertexKind::Boundary, webs[0].color[webs[0].boundary[j]], bpos[j]);
  ov.drawing.boundary = slot;
  for (size_t i = 0; i < webs.size(); ++i) {
    const Web& w = webs[i];
    if (w.numBoundary() != n) throw WebError("superimpose: boundary sizes differ");
    for (int j = 0; j < n; ++j)
      if (w.color[w.boundary[j]] != webs[0].color[webs[0].boundary[j]])
        throw WebError("superimpose: boundary colors differ");
    Layout lay = tutteLayout(w, LayoutFrame::Disc, 7 + i);
    double s = 1.0 - plan.shrink * static_cast<double>(i);
    double t = plan.turn * static_cast<double>(i);
    auto xf = [&](Pt p) {
      return Pt{s * (std::cos(t) * p.x - std::sin(t) * p.y), s * (std::sin(t) * p.x + std::cos(t) * p.y)};
    };
    std::vector<int> vmap(w.numVertices(), -1);
    for (int j = 0; j < n; ++j) vmap[w.boundary[j]] = slot[j];
    for (int v = 0; v < w.numVertices(); ++v)
      if (vmap[v] < 0) vmap[v] = ov.drawing.addVertex(w.kind[v], w.color[v], xf(lay.vpos[v]));
    std::vector<int> emap(w.numHalfEdges(), -1);
    for (int h = 0; h < w.numHalfEdges(); ++h) {
      if (h > w.twin[h]) continue;
      int e = ov.drawing.addEdge(vmap[w.hv[h]], vmap[w.hv[w.twin[h]]], {xf(lay.mid[h])},
                                 static_cast<int>(i));
      emap[h] = emap[w.twin[h]] = e;
    }
    ov.drawing.loops += w.loops;
    ov.vertexOf.push_back(vmap);
    ov.edgeOf.push_back(emap);
  }
  return ov;
}

Web superimpose(const std::vector<Web>& webs, const SuperimposePlan& plan) {
  if (webs.size() == 1 && !plan.unclaspResult) return webs[0];
  Web w = webFromDrawing(overlay(webs, plan).drawing);
  return plan.unclaspResult ? unclasp(w) : w;
}

int defaultCycleHalfEdge(const Web& w) {
  FaceSet fs = facesOf(w);
  for (size_t f = 0; f < fs.faces.size(); ++f) {
    if (!fs.internal[f]) continue;
    for (int h : fs.faces[f])
      if (w.isInternal(w.hv[h]) && w.isInternal(w.other(h))) return h;
  }
  throw WebError("web has no internal cycle edge");
}

Web permutedCable(const Web& w, int k, const std::vector<int>& perm, int cut) {
  if (static_cast<int>(perm.size()) != k) throw WebError("permutation size mismatch");
  if (cut < 0) cut = defaultCycleHalfEdge(w);
  std::vector<Web> copies(k, w);
  Overlay ov = overlay(copies, {});
  int a = w.hv[cut], b = w.hv[w.twin[cut]];
  for (int i = 0; i < k; ++i) {
    auto& e = ov.drawing.edges[ov.edgeOf[i][cut]];
    int from = ov.vertexOf[i][a];
    int to = ov.vertexOf[perm[i]][b];
    e.a = from;
    e.b = to;
    const Pt& p = ov.drawing.verts[from].p;
    const Pt& q = ov.drawing.verts[to].p;
    e.bends = {{(p.x + q.x) / 2 + 1e-3 * (i + 1), (p.y + q.y) / 2 - 7e-4 * (i + 1)}};
  }
  return webFromDrawing(ov.drawing);
}

Web cupUnion(const std::vector<Web>& webs) {
  if (webs.empty()) return emptyWeb();
  SuperimposePlan plan;
  plan.shrink = 0.08;
  plan.turn = 0.0;
  Web w = webFromDrawing(overlay(webs, plan).drawing);
  if (w.numCrossings() > 0) throw WebError("cup union: supports cross");
  return unclasp(w);
}

}  // namespace sl3web
