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

#include "sl3web/randomweb.hpp"

#include <algorithm>
#include <cmath>

#include "sl3web/corpus.hpp"
#include "sl3web/layout.hpp"

namespace sl3web {

void insertBigon(Web& w, int h) {
  int a = w.hv[h], t = w.twin[h];
  int x = w.addVertex(VertexKind::Internal, opposite(w.color[a]));
  int y = w.addVertex(VertexKind::Internal, w.color[a]);
  int x0 = w.newHalfEdge(x), x1 = w.newHalfEdge(x), x2 = w.newHalfEdge(x);
  int y0 = w.newHalfEdge(y), y1 = w.newHalfEdge(y), y2 = w.newHalfEdge(y);
  w.link(h, x0);
  w.link(x1, y0);
  w.link(x2, y2);
  w.link(y1, t);
}

namespace {

Web randomPiece(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  Color c = rng() & 1 ? Color::White : Color::Black;
  Web w;
  switch (pick(rng)) {
    case 0:
    case 1: w = edgeWeb(c); break;
    case 2: w = tripod(c); break;
    case 3: w = hWeb(); break;
    case 4: w = squareWeb(); break;
    case 5: w = hexagonW(); break;
    case 6: w = bigonWeb(); break;
    default: w = tripod(c); break;
  }
  if (pick(rng) < 2) {
    std::vector<int> hs;
    for (int h = 0; h < w.numHalfEdges(); ++h) hs.push_back(h);
    insertBigon(w, hs[rng() % hs.size()]);
  }
  return rotateMarked(w, static_cast<int>(rng() % std::max(1, w.numBoundary())));
}

}  // namespace

Web randomDiagram(std::mt19937_64& rng, int maxInternal, int maxCrossings) {
  std::uniform_int_distribution<int> count(1, 3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int pieces = count(rng);
    std::vector<Web> ws;
    int internal = 0, n = 0;
    for (int i = 0; i < pieces; ++i) {
      ws.push_back(randomPiece(rng));
      internal += ws.back().numInternal();
      n += ws.back().numBoundary();
    }
    if (internal > maxInternal) continue;
    std::vector<int> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    auto bpos = boundaryPositions(n, LayoutFrame::Disc);
    Drawing d;
    std::vector<int> slotVertex(n, -1);
    int used = 0;
    try {
      for (size_t i = 0; i < ws.size(); ++i) {
        const Web& w = ws[i];
        int m = w.numBoundary();
        std::vector<int> mine(slots.begin() + used, slots.begin() + used + m);
        used += m;
        std::sort(mine.begin(), mine.end());
        std::vector<Pt> pos;
        for (int s : mine) pos.push_back(bpos[s]);
        Layout lay = tutteLayoutAt(w, pos, {}, rng());
        Drawing piece = drawingOf(w, lay);
        std::uniform_real_distribution<double> jitter(-0.03, 0.03);
        std::vector<int> vmap(piece.verts.size(), -1);
        for (int j = 0; j < m; ++j) {
          int bv = piece.boundary[j];
          int nv = d.addVertex(VertexKind::Boundary, piece.verts[bv].color, bpos[mine[j]]);
          vmap[bv] = nv;
          slotVertex[mine[j]] = nv;
        }
        for (size_t v = 0; v < piece.verts.size(); ++v) {
          if (vmap[v] >= 0) continue;
          Pt p = piece.verts[v].p;
          p.x += jitter(rng);
          p.y += jitter(rng);
          vmap[v] = d.addVertex(piece.verts[v].kind, piece.verts[v].color, p);
        }
        for (const auto& e : piece.edges) {
          auto bends = e.bends;
          for (auto& b : bends) {
            b.x += jitter(rng);
            b.y += jitter(rng);
          }
          d.addEdge(vmap[e.a], vmap[e.b], bends, static_cast<int>(rng() % 4));
        }
      }
      d.boundary = slotVertex;
      d.loops = rng() % 5 == 0 ? 1 : 0;
      Web out = webFromDrawing(d);
      if (out.numCrossings() > maxCrossings) continue;
      out.validate();
      return out;
    } catch (const WebError&) {
      continue;
    }
  }
  throw WebError("random diagram generation failed");
}

}  // namespace sl3web
