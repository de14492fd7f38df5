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

#include "sl3web/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sl3web/layout.hpp"
#include "sl3web/superimpose.hpp"

namespace sl3web {

namespace {

constexpr double kPi = 3.14159265358979323846;

Pt polar(double r, double th) { return {r * std::cos(th), r * std::sin(th)}; }

double slotAngle(int j, int n) { return kPi / 2 - 2 * kPi * j / n; }

}  // namespace

Web edgeWeb(Color first) {
  Drawing d;
  int a = d.addVertex(VertexKind::Boundary, first, polar(1, slotAngle(0, 2)));
  int b = d.addVertex(VertexKind::Boundary, opposite(first), polar(1, slotAngle(1, 2)));
  d.addEdge(a, b);
  d.boundary = {a, b};
  return webFromDrawing(d);
}

Web tripod(Color leaves) {
  Drawing d;
  int c = d.addVertex(VertexKind::Internal, opposite(leaves), {0, 0});
  for (int j = 0; j < 3; ++j) {
    int b = d.addVertex(VertexKind::Boundary, leaves, polar(1, slotAngle(j, 3)));
    d.addEdge(c, b);
    d.boundary.push_back(b);
  }
  return webFromDrawing(d);
}

Web hWeb() {
  Drawing d;
  std::vector<int> b;
  Color cols[4] = {Color::Black, Color::Black, Color::White, Color::White};
  for (int j = 0; j < 4; ++j) b.push_back(d.addVertex(VertexKind::Boundary, cols[j], polar(1, slotAngle(j, 4))));
  double m01 = (slotAngle(0, 4) + slotAngle(1, 4)) / 2;
  double m23 = (slotAngle(2, 4) + slotAngle(3, 4)) / 2;
  int x = d.addVertex(VertexKind::Internal, Color::White, polar(0.4, m01));
  int y = d.addVertex(VertexKind::Internal, Color::Black, polar(0.4, m23));
  d.addEdge(x, b[0]);
  d.addEdge(x, b[1]);
  d.addEdge(y, b[2]);
  d.addEdge(y, b[3]);
  d.addEdge(x, y);
  d.boundary = b;
  return webFromDrawing(d);
}

Web hexagonW() {
  Drawing d;
  std::vector<int> hex, bd;
  for (int j = 0; j < 6; ++j) {
    Color bc = j % 2 == 0 ? Color::Black : Color::White;
    bd.push_back(d.addVertex(VertexKind::Boundary, bc, polar(1, slotAngle(j, 6))));
    hex.push_back(d.addVertex(VertexKind::Internal, opposite(bc), polar(0.45, slotAngle(j, 6))));
  }
  for (int j = 0; j < 6; ++j) {
    d.addEdge(hex[j], bd[j]);
    d.addEdge(hex[j], hex[(j + 1) % 6]);
  }
  d.boundary = bd;
  return webFromDrawing(d);
}

Web webB() {
  Drawing d;
  std::vector<int> bd;
  for (int j = 0; j < 6; ++j)
    bd.push_back(d.addVertex(VertexKind::Boundary, j % 2 == 0 ? Color::Black : Color::White,
                             polar(1, slotAngle(j, 6))));
  for (int j = 0; j < 6; ++j) {
    double mid = slotAngle(j, 6) - kPi / 6;
    d.addEdge(bd[j], bd[(j + 1) % 6], {polar(0.8, mid)});
  }
  d.boundary = bd;
  return webFromDrawing(d);
}

int markedSlot(int k) { return k <= 1 ? 1 : (k + 3) / 2; }

std::vector<int> thickRuns(int k) { return std::vector<int>(6, k); }

namespace {

// Honeycomb patch with legs; boundary starts at the first leg of a black clasp.
Web honeycombRaw(int k) {
  Drawing d;
  std::map<std::pair<long, long>, int> idx;
  std::vector<Pt> pts;
  std::vector<int> cls;
  auto vid = [&](Pt p, int c) {
    auto key = std::make_pair(std::lround(p.x * 1000), std::lround(p.y * 1000));
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    int id = static_cast<int>(pts.size());
    idx.emplace(key, id);
    pts.push_back(p);
    cls.push_back(c);
    return id;
  };
  std::map<std::pair<int, int>, int> edges;
  int R = k - 1;
  for (int q = -R; q <= R; ++q) {
    for (int r = -R; r <= R; ++r) {
      if (std::abs(q + r) > R) continue;
      Pt c{std::sqrt(3.0) * (q + r / 2.0), 1.5 * r};
      int cs[6];
      for (int i = 0; i < 6; ++i) {
        double th = kPi / 2 - kPi / 3 * i;
        cs[i] = vid({c.x + std::cos(th), c.y + std::sin(th)}, i % 2);
      }
      for (int i = 0; i < 6; ++i) {
        int a = cs[i], b = cs[(i + 1) % 6];
        edges.emplace(std::minmax(a, b), 1);
      }
    }
  }
  int nv = static_cast<int>(pts.size());
  std::vector<int> deg(nv, 0);
  for (auto& [e, one] : edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  double radius = 0;
  for (Pt p : pts) radius = std::max(radius, std::hypot(p.x, p.y));
  double R0 = radius * 1.6 + 1;
  std::vector<int> dv(nv);
  for (int i = 0; i < nv; ++i)
    dv[i] = d.addVertex(VertexKind::Internal, cls[i] == 0 ? Color::White : Color::Black, pts[i]);
  for (auto& [e, one] : edges) d.addEdge(dv[e.first], dv[e.second]);
  struct Leg {
    double ang;
    int v;
  };
  std::vector<Leg> legs;
  for (int i = 0; i < nv; ++i)
    if (deg[i] == 2) legs.push_back({std::atan2(pts[i].y, pts[i].x), i});
  std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.ang > b.ang; });
  std::vector<int> bd;
  for (const Leg& l : legs) {
    Color bc = opposite(d.verts[dv[l.v]].color);
    int b = d.addVertex(VertexKind::Boundary, bc, polar(R0, l.ang));
    d.addEdge(dv[l.v], b);
    bd.push_back(b);
  }
  int n = static_cast<int>(bd.size());
  if (n != 6 * k) throw WebError("honeycomb: unexpected leg count");
  int s = 0;
  while (d.verts[bd[s]].color == d.verts[bd[(s + n - 1) % n]].color) ++s;
  if (k == 1) s = 0;
  while (d.verts[bd[s % n]].color != Color::Black) s += k;
  std::rotate(bd.begin(), bd.begin() + (s % n), bd.end());
  for (int g = 0; g < 6; ++g)
    for (int i = 0; i < k; ++i)
      if (d.verts[bd[g * k + i]].color != d.verts[bd[g * k]].color)
        throw WebError("honeycomb: legs do not group into clasps");
  d.boundary = bd;
  return webFromDrawing(d);
}

}  // namespace

Web honeycomb(int k) { return clasp(honeycombRaw(k), thickRuns(k)); }

Web honeycombUnclasped(int k) { return rotateMarked(honeycombRaw(k), markedSlot(k) - 1); }

Web cupUnionWB(int copiesOfB) {
  std::vector<Web> parts;
  for (int i = 0; i < copiesOfB; ++i) parts.push_back(webB());
  parts.push_back(hexagonW());
  Web u = cupUnion(parts);
  int per = 1 + 2 * copiesOfB;
  int slot = copiesOfB == 2 ? 4 : (per + 3) / 2;
  return rotateMarked(u, slot - 1);
}

Web bigonWeb() {
  Drawing d;
  int a = d.addVertex(VertexKind::Boundary, Color::White, {0, 1});
  int b = d.addVertex(VertexKind::Boundary, Color::Black, {0, -1});
  int u = d.addVertex(VertexKind::Internal, Color::Black, {0, 0.4});
  int v = d.addVertex(VertexKind::Internal, Color::White, {0, -0.4});
  d.addEdge(a, u);
  d.addEdge(u, v, {{0.3, 0}});
  d.addEdge(u, v, {{-0.3, 0}});
  d.addEdge(v, b);
  d.boundary = {a, b};
  return webFromDrawing(d);
}

Web squareWeb() {
  Drawing d;
  std::vector<int> sq, bd;
  for (int j = 0; j < 4; ++j) {
    Color c = j % 2 == 0 ? Color::White : Color::Black;
    sq.push_back(d.addVertex(VertexKind::Internal, c, polar(0.4, slotAngle(j, 4))));
    bd.push_back(d.addVertex(VertexKind::Boundary, opposite(c), polar(1, slotAngle(j, 4))));
  }
  for (int j = 0; j < 4; ++j) {
    d.addEdge(sq[j], bd[j]);
    d.addEdge(sq[j], sq[(j + 1) % 4]);
  }
  d.boundary = bd;
  return webFromDrawing(d);
}

Web loopWeb() {
  Web w;
  w.loops = 1;
  return w;
}

std::vector<int> parseState(const std::string& s) {
  std::vector<int> out;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-') {
      if (i + 1 >= s.size() || s[i + 1] != '1') throw WebError("bad state string");
      out.push_back(-1);
      ++i;
    } else if (c == '+') {
      continue;
    } else if (c == '1') {
      out.push_back(1);
    } else if (c == '0') {
      out.push_back(0);
    } else if (c == ' ' || c == ',' || c == '(' || c == ')' || c == '|') {
      continue;
    } else {
      throw WebError(std::string("bad state character '") + c + "'");
    }
  }
  return out;
}

std::string stateString(const std::vector<int>& j) {
  std::string s;
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(j[i]);
  }
  return s;
}

std::vector<int> dominantThick5Expected() {
  return parseState("11 11111 00111 00000 -1-1000 -1-1-1-1-1 -1-1-1");
}

std::vector<int> dominantWBBExpected() {
  return parseState("11 -1-1111 -1-1111 -1-1011 -1-1011 -1-1-111 -1-1-1");
}

std::string signatureS5() { return "bb wwwww bbbbb wwwww bbbbb wwwww bbb"; }
std::string signatureS3() { return "b www bbb www bbb www bb"; }

}  // namespace sl3web
