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

#include "sl3web/layout.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <random>

namespace sl3web {

namespace {

constexpr double kPi = 3.14159265358979323846;

double angleOf(Pt d) { return std::atan2(d.y, d.x); }

struct Hit {
  int seg;
  double t;
  int node;
  int occ;  // which strand slot of the crossing node
};

double cross2(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }

}  // namespace

Web webFromDrawing(const Drawing& d) {
  Web w;
  for (const auto& v : d.verts) w.addVertex(v.kind, v.color);
  int ne = static_cast<int>(d.edges.size());
  std::vector<std::vector<Pt>> poly(ne);
  struct Seg {
    int e, s;
    Pt p, q;
  };
  std::vector<Seg> segs;
  for (int e = 0; e < ne; ++e) {
    const auto& E = d.edges[e];
    poly[e].push_back(d.verts[E.a].p);
    for (Pt b : E.bends) poly[e].push_back(b);
    poly[e].push_back(d.verts[E.b].p);
    for (size_t s = 0; s + 1 < poly[e].size(); ++s)
      segs.push_back({e, static_cast<int>(s), poly[e][s], poly[e][s + 1]});
  }
  struct Crossing {
    Pt p;
    int e[2], s[2];
    double t[2];
  };
  std::vector<Crossing> cx;
  const double eps = 1e-9;
  auto same = [](Pt a, Pt b) { return std::abs(a.x - b.x) < 1e-12 && std::abs(a.y - b.y) < 1e-12; };
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& A = segs[i];
      const Seg& B = segs[j];
      if (A.e == B.e && std::abs(A.s - B.s) <= 1) continue;
      Pt r{A.q.x - A.p.x, A.q.y - A.p.y};
      Pt s{B.q.x - B.p.x, B.q.y - B.p.y};
      double den = cross2(r, s);
      Pt qp{B.p.x - A.p.x, B.p.y - A.p.y};
      bool shareEnd = same(A.p, B.p) || same(A.p, B.q) || same(A.q, B.p) || same(A.q, B.q);
      double scale = std::sqrt((r.x * r.x + r.y * r.y) * (s.x * s.x + s.y * s.y));
      if (std::abs(den) < 1e-12 * scale) {
        if (std::abs(cross2(qp, r)) < 1e-12 * std::sqrt(r.x * r.x + r.y * r.y) + 1e-15 && !shareEnd) {
          double rr = r.x * r.x + r.y * r.y;
          double t0 = (qp.x * r.x + qp.y * r.y) / rr;
          double t1 = t0 + (s.x * r.x + s.y * r.y) / rr;
          if (std::max(t0, t1) > -eps && std::min(t0, t1) < 1 + eps)
            throw WebError("drawing has overlapping collinear segments");
        }
        continue;
      }
      double t = cross2(qp, s) / den;
      double u = cross2(qp, r) / den;
      if (t < -eps || t > 1 + eps || u < -eps || u > 1 + eps) continue;
      bool interior = t > eps && t < 1 - eps && u > eps && u < 1 - eps;
      if (!interior) {
        if (shareEnd) continue;
        throw WebError("drawing has a segment touching another");
      }
      Crossing c;
      c.p = {A.p.x + t * r.x, A.p.y + t * r.y};
      c.e[0] = A.e;
      c.s[0] = A.s;
      c.t[0] = t;
      c.e[1] = B.e;
      c.s[1] = B.s;
      c.t[1] = u;
      cx.push_back(c);
    }
  }
  std::vector<std::vector<Hit>> hits(ne);
  std::vector<int> cnode(cx.size());
  for (size_t i = 0; i < cx.size(); ++i) {
    cnode[i] = w.addVertex(VertexKind::Crossing, Color::White);
    for (int k = 0; k < 2; ++k) hits[cx[i].e[k]].push_back({cx[i].s[k], cx[i].t[k], cnode[i], k});
  }
  // direction of each half-edge, for angular sorting
  std::vector<Pt> dir;
  std::vector<int> heEdge;
  auto addHalf = [&](int v, Pt dv, int edge) {
    int h = w.newHalfEdge(v);
    dir.push_back(dv);
    heEdge.push_back(edge);
    return h;
  };
  for (int e = 0; e < ne; ++e) {
    auto& hl = hits[e];
    std::sort(hl.begin(), hl.end(), [](const Hit& a, const Hit& b) {
      return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
    });
    const auto& P = poly[e];
    int prevNode = d.edges[e].a;
    Pt prevForward{P[1].x - P[0].x, P[1].y - P[0].y};
    for (const Hit& hit : hl) {
      Pt back{P[hit.seg].x - P[hit.seg + 1].x, P[hit.seg].y - P[hit.seg + 1].y};
      int h1 = addHalf(prevNode, prevForward, e);
      int h2 = addHalf(hit.node, back, e);
      w.link(h1, h2);
      prevNode = hit.node;
      prevForward = {-back.x, -back.y};
    }
    size_t m = P.size() - 1;
    Pt back{P[m - 1].x - P[m].x, P[m - 1].y - P[m].y};
    int h1 = addHalf(prevNode, prevForward, e);
    int h2 = addHalf(d.edges[e].b, back, e);
    w.link(h1, h2);
  }
  for (int v = 0; v < w.numVertices(); ++v) {
    auto& r = w.rot[v];
    if (v < static_cast<int>(d.verts.size()) && d.verts[v].kind == VertexKind::Boundary) {
      Pt p = d.verts[v].p;
      double out = angleOf({p.x - d.center.x, p.y - d.center.y});
      auto phi = [&](int h) {
        double a = angleOf(dir[h]) - out;
        while (a <= 0) a += 2 * kPi;
        while (a > 2 * kPi) a -= 2 * kPi;
        return a;
      };
      std::sort(r.begin(), r.end(), [&](int a, int b) { return phi(a) < phi(b); });
    } else {
      std::sort(r.begin(), r.end(), [&](int a, int b) { return angleOf(dir[a]) > angleOf(dir[b]); });
    }
  }
  for (size_t i = 0; i < cx.size(); ++i) {
    int c = cnode[i];
    const auto& r = w.rot[c];
    if (r.size() != 4 || (heEdge[r[0]] == heEdge[r[1]] && cx[i].e[0] != cx[i].e[1]))
      throw WebError("crossing strands do not alternate");
    const auto& ea = d.edges[cx[i].e[0]];
    const auto& eb = d.edges[cx[i].e[1]];
    int top = (ea.layer != eb.layer) ? (ea.layer > eb.layer ? cx[i].e[0] : cx[i].e[1])
                                     : std::max(cx[i].e[0], cx[i].e[1]);
    w.over[c] = heEdge[r[0]] == top ? 0 : 1;
  }
  for (int b : d.boundary) w.boundary.push_back(b);
  w.loops = d.loops;
  return w;
}

std::vector<Pt> boundaryPositions(int n, LayoutFrame frame) {
  std::vector<Pt> out(n);
  for (int j = 0; j < n; ++j) {
    double th = frame == LayoutFrame::Disc ? kPi / 2 - 2 * kPi * j / n : kPi - kPi * (j + 0.5) / n;
    out[j] = {std::cos(th), std::sin(th)};
  }
  return out;
}

Drawing drawingOf(const Web& w, const Layout& lay) {
  Drawing d;
  for (int v = 0; v < w.numVertices(); ++v) d.addVertex(w.kind[v], w.color[v], lay.vpos[v]);
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (!w.alive[w.hv[h]] || h > w.twin[h]) continue;
    d.addEdge(w.hv[h], w.hv[w.twin[h]], {lay.mid[h]});
  }
  d.boundary = w.boundary;
  d.loops = w.loops;
  return d;
}

Layout tutteLayout(const Web& w, LayoutFrame frame, uint64_t seed) {
  int n = w.numBoundary();
  std::vector<Pt> dummies;
  if (frame == LayoutFrame::UpperHalf) {
    int m = std::max(3, n);
    for (int i = 0; i < m; ++i) {
      double th = -kPi * (i + 0.5) / m;
      dummies.push_back({std::cos(th), std::sin(th)});
    }
  }
  return tutteLayoutAt(w, boundaryPositions(n, frame), dummies, seed);
}

Layout tutteLayoutAt(const Web& w, const std::vector<Pt>& bp, const std::vector<Pt>& dummyPos,
                     uint64_t seed) {
  int n = w.numBoundary();
  if (n == 0) throw WebError("layout needs at least one boundary point");
  int comps = 0;
  auto comp = componentOf(w, &comps);
  if (comps != 1) throw WebError("layout needs every component to reach the boundary");
  FaceSet fs = facesOf(w);
  int V = w.numVertices();
  int H = w.numHalfEdges();
  // node ids: vertices, edge midpoints, face centers, dummies
  std::vector<int> midNode(H, -1);
  int next = V;
  for (int h = 0; h < H; ++h)
    if (h < w.twin[h]) midNode[h] = midNode[w.twin[h]] = next++;
  std::vector<int> faceNode(fs.faces.size(), -1);
  for (size_t f = 0; f < fs.faces.size(); ++f)
    if (!fs.faces[f].empty()) faceNode[f] = next++;
  std::vector<int> dummies;
  for (size_t i = 0; i < dummyPos.size(); ++i) dummies.push_back(next++);
  int N = next;
  std::vector<Pt> pos(N);
  std::vector<uint8_t> fixed(N, 0);
  for (int j = 0; j < n; ++j) {
    pos[w.boundary[j]] = bp[j];
    fixed[w.boundary[j]] = 1;
  }
  for (size_t i = 0; i < dummies.size(); ++i) {
    pos[dummies[i]] = dummyPos[i];
    fixed[dummies[i]] = 1;
  }
  std::vector<std::pair<int, int>> adj;
  for (int h = 0; h < H; ++h) adj.emplace_back(w.hv[h], midNode[h]);
  for (size_t f = 0; f < fs.faces.size(); ++f) {
    if (faceNode[f] < 0) continue;
    for (int h : fs.faces[f]) {
      adj.emplace_back(faceNode[f], w.hv[h]);
      adj.emplace_back(faceNode[f], midNode[h]);
    }
  }
  if (!dummies.empty() && n > 0) {
    int f = fs.arcFace[n - 1];
    if (f >= 0 && faceNode[f] >= 0)
      for (int dmy : dummies) adj.emplace_back(faceNode[f], dmy);
  }
  std::vector<int> freeIdx(N, -1);
  int nf = 0;
  for (int i = 0; i < N; ++i)
    if (!fixed[i]) freeIdx[i] = nf++;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wdist(0.5, 1.5);
  std::string want = canonicalKey(w);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(nf), by = Eigen::VectorXd::Zero(nf);
    std::vector<double> diag(nf, 0.0);
    for (auto [a, b] : adj) {
      double wt = attempt == 0 ? 1.0 : wdist(rng);
      for (int k = 0; k < 2; ++k) {
        int x = k ? b : a, y = k ? a : b;
        if (fixed[x]) continue;
        diag[freeIdx[x]] += wt;
        if (fixed[y]) {
          bx[freeIdx[x]] += wt * pos[y].x;
          by[freeIdx[x]] += wt * pos[y].y;
        } else {
          trip.emplace_back(freeIdx[x], freeIdx[y], -wt);
        }
      }
    }
    for (int i = 0; i < nf; ++i) trip.emplace_back(i, i, diag[i]);
    Eigen::SparseMatrix<double> L(nf, nf);
    L.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(L);
    if (solver.info() != Eigen::Success) continue;
    Eigen::VectorXd sx = solver.solve(bx), sy = solver.solve(by);
    for (int i = 0; i < N; ++i) {
      if (fixed[i]) continue;
      pos[i] = {sx[freeIdx[i]], sy[freeIdx[i]]};
    }
    Layout lay;
    lay.vpos.assign(pos.begin(), pos.begin() + V);
    lay.mid.resize(H);
    for (int h = 0; h < H; ++h) lay.mid[h] = pos[midNode[h]];
    try {
      Web back = webFromDrawing(drawingOf(w, lay));
      if (back.numCrossings() == 0 && canonicalKey(back) == want) return lay;
    } catch (const WebError&) {
    }
  }
  throw WebError("barycentric layout failed to reproduce the rotation system");
}

}  // namespace sl3web
