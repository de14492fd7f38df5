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

#include "sl3web/discconfig.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sl3web/corpus.hpp"

namespace sl3web {

namespace {

constexpr double kPi = 3.14159265358979323846;

int idx(Position p) { return static_cast<int>(p); }
Position opposite(Position p) { return static_cast<Position>((idx(p) + 3) % 6); }

int rotationExponentImpl(const RotationChart& c, Position from, Position to, bool clockwise) {
  int e = 0;
  int d = idx(from);
  while (d != idx(to)) {
    if (clockwise) {
      d = (d + 5) % 6;
      e -= c[d];
    } else {
      e += c[d];
      d = (d + 1) % 6;
    }
  }
  return e;
}

bool tryFrame(const Web& w, double t, DiscFrame* out) {
  int n = w.numBoundary();
  std::vector<Pt> bp(n);
  std::vector<double> theta(n);
  for (int i = 0; i < n; ++i) {
    theta[i] = -kPi / 2 - 2 * kPi * (i + t) / n + 1e-4 * std::sin(3.7 * i + 1);
    bp[i] = {std::cos(theta[i]), std::sin(theta[i])};
  }
  DiscFrame df;
  df.angle = theta;
  HeightFrame& f = df.frame;
  f.web = w;
  try {
    f.layout = tutteLayoutAt(w, bp, {}, 1);
  } catch (const WebError&) {
    return false;
  }
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (!w.alive[w.hv[h]]) continue;
    Pt a = f.layout.vpos[w.hv[h]], b = f.layout.vpos[w.hv[w.twin[h]]];
    f.layout.mid[h] = {(a.x + b.x) / 2, (a.y + b.y) / 2};
  }
  try {
    Web back = webFromDrawing(drawingOf(w, f.layout));
    if (back.numCrossings() != 0 || canonicalKey(back) != canonicalKey(w)) return false;
  } catch (const WebError&) {
    return false;
  }
  const Layout& L = f.layout;
  int V = w.numVertices();
  df.type.assign(V, 0);
  // role of each half-edge at its internal vertex
  std::vector<int>& role = df.role;
  role.assign(w.numHalfEdges(), -1);
  for (int v = 0; v < V; ++v) {
    if (!w.alive[v] || !w.isInternal(v)) continue;
    std::vector<int> ups, downs;
    for (int h : w.rot[v]) (L.vpos[w.hv[w.twin[h]]].y > L.vpos[v].y ? ups : downs).push_back(h);
    auto ang = [&](int h) {
      Pt c = L.vpos[v], o = L.vpos[w.hv[w.twin[h]]];
      return std::atan2(o.y - c.y, o.x - c.x);
    };
    if (ups.size() == 2) {
      df.type[v] = 'Y';
      std::sort(ups.begin(), ups.end(), [&](int a, int b) { return ang(a) > ang(b); });
      role[ups[0]] = idx(Position::NW);
      role[ups[1]] = idx(Position::NE);
      role[downs[0]] = idx(Position::S);
    } else if (ups.size() == 1) {
      df.type[v] = 'L';
      std::sort(downs.begin(), downs.end(), [&](int a, int b) { return ang(a) < ang(b); });
      role[downs[0]] = idx(Position::SW);
      role[downs[1]] = idx(Position::SE);
      role[ups[0]] = idx(Position::N);
    } else {
      return false;
    }
  }
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    int a = w.hv[h], b = w.hv[w.twin[h]];
    if (!w.alive[a] || !w.isInternal(a) || !w.isInternal(b)) continue;
    if (df.type[a] == df.type[b]) return false;
    if (role[w.twin[h]] != (role[h] + 3) % 6) return false;
  }
  df.positions.resize(n);
  df.side.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int h = w.rot[w.boundary[i]][0];
    if (!w.isInternal(w.hv[w.twin[h]])) return false;
    Position p = static_cast<Position>(role[w.twin[h]]);
    df.positions[i] = p;
    if (isLower(p) != (bp[i].y < 0)) return false;
  }
  // lower legs: a run at the start turns left, the rest turn right
  int leftRun = 0;
  while (leftRun < n && bp[leftRun].y < 0) ++leftRun;
  f.top.assign(n, {});
  f.route.assign(n, {});
  int rightCount = 0;
  for (int i = leftRun; i < n; ++i)
    if (bp[i].y < 0) ++rightCount;
  double rmax = 1.2 + 0.1 * n;
  double ytop = 2 + rmax;
  int rightSeen = 0;
  for (int i = 0; i < n; ++i) {
    if (bp[i].y >= 0) {
      f.top[i] = {bp[i].x, ytop};
      continue;
    }
    bool left = i < leftRun;
    double r = left ? 1.15 + 0.1 * (leftRun - 1 - i) : 1.15 + 0.1 * rightSeen++;
    df.side[i] = left ? -1 : 1;
    double th = std::atan2(bp[i].y, bp[i].x);  // in (-pi, 0)
    double end = left ? -kPi - 0.05 : 0.05;
    std::vector<Pt>& route = f.route[i];
    int steps = std::max(2, static_cast<int>(std::ceil(std::abs(end - th) / 0.08)));
    for (int s = 0; s <= steps; ++s) {
      double a = th + (end - th) * s / steps;
      route.push_back({r * std::cos(a), r * std::sin(a)});
    }
    f.top[i] = {route.back().x, ytop};
  }
  *out = std::move(df);
  return true;
}

// Flow lines of a flow, in the orientation used by the flow tables: state 1
// where a line runs into the boundary.
struct Line {
  std::vector<int> halves;  // half-edges traversed, each leaving its vertex
  bool closed = false;
};

std::vector<Line> linesOf(const Web& w, const Flow& f) {
  int H = w.numHalfEdges();
  std::vector<int> out(H, 0);  // flow leaves hv[h] along h
  for (size_t e = 0; e < f.edgeHalf.size(); ++e) {
    int h = f.edgeHalf[e];
    if (f.dir[e] == 1) out[h] = 1;
    if (f.dir[e] == -1) out[w.twin[h]] = 1;
  }
  std::vector<uint8_t> used(H, 0);
  std::vector<Line> lines;
  auto follow = [&](int h, Line& ln) {
    while (true) {
      used[h] = 1;
      ln.halves.push_back(h);
      int u = w.hv[w.twin[h]];
      if (!w.isInternal(u)) return;
      int nxt = -1;
      for (int g : w.rot[u])
        if (out[g]) nxt = g;
      if (nxt < 0) throw WebError("flow line stops inside the web");
      if (used[nxt]) {
        ln.closed = true;
        return;
      }
      h = nxt;
    }
  };
  for (int b : w.boundary) {
    int h = w.rot[b][0];
    if (!out[h]) continue;
    Line ln;
    follow(h, ln);
    lines.push_back(ln);
  }
  for (int h = 0; h < H; ++h) {
    if (!out[h] || used[h]) continue;
    Line ln;
    follow(h, ln);
    lines.push_back(ln);
  }
  return lines;
}

// Signed number of sixth turns made by a line at its internal vertices.
int turnsOf(const Web& w, const DiscFrame& df, const Line& ln) {
  int steps = 0;
  size_t n = ln.halves.size();
  for (size_t k = 0; k + 1 < n + (ln.closed ? 1 : 0); ++k) {
    int in = ln.halves[k], out = ln.halves[(k + 1) % n];
    int d = ((df.role[out] - (df.role[w.twin[in]] + 3)) % 6 + 6) % 6;
    steps += d == 1 ? 1 : -1;
  }
  return steps;
}

// Rotation weight of the turning swept by a line: starting from direction
// from, |steps| sixth turns, counterclockwise when steps is positive.
int sweptExponent(const RotationChart& c, Position from, int steps) {
  int e = 0;
  int d = idx(from);
  for (int s = 0; s < std::abs(steps); ++s) {
    if (steps < 0) {
      d = (d + 5) % 6;
      e -= c[d];
    } else {
      e += c[d];
      d = (d + 1) % 6;
    }
  }
  return e;
}

}  // namespace

const RotationChart kRotationChart = {0, 0, 0, 1, -1, 1};

const char* positionName(Position p) {
  static const char* names[] = {"N", "NW", "SW", "S", "SE", "NE"};
  return names[idx(p)];
}

bool isLower(Position p) { return p == Position::SW || p == Position::S || p == Position::SE; }

int rotationExponent(const RotationChart& c, Position from, Position to, bool clockwise) {
  return rotationExponentImpl(c, from, to, clockwise);
}

DiscFrame discFrame(const Web& w0) {
  if (w0.numCrossings() > 0) throw WebError("disc configurations need a crossing-free web");
  Web w = w0.compacted();
  for (int b : w.boundary)
    if (w.degree(b) != 1) throw WebError("disc configurations need an unclasped web");
  if (w.numBoundary() == 0) throw WebError("disc configurations need boundary points");
  DiscFrame df;
  for (double t : {0.5, 0.25, 0.75, 0.1, 0.9, 0.4, 0.6, 0.0})
    if (tryFrame(w, t, &df)) return df;
  throw WebError("web has no drawing with alternating Y and lambda vertices");
}

bool discFrameAt(const Web& w, double t, DiscFrame* out) { return tryFrame(w.compacted(), t, out); }

bool hasDiscFrame(const Web& w) {
  try {
    discFrame(w);
    return true;
  } catch (const WebError&) {
    return false;
  }
}

int offsetExponent(const DiscFrame& df, const StateString& j, int* uOut, int* eOut) {
  int u = 0, e = 0;
  for (size_t i = 0; i < j.size(); ++i) {
    Position p = df.positions[i];
    if (!isLower(p)) continue;
    if (j[i] == 0) ++e;
    bool right = df.side[i] > 0, left = df.side[i] < 0;
    if ((j[i] == 1 && right) || (j[i] == -1 && left)) ++u;
  }
  if (uOut) *uOut = u;
  if (eOut) *eOut = e;
  return -2 * u - e;
}

DiscConfiguration configurationOf(const DiscFrame& df, const Flow& f, const RotationChart& c) {
  const Web& w = df.frame.web;
  DiscConfiguration dc;
  dc.positionString = df.positions;
  dc.state = f.state;
  dc.offset = offsetExponent(df, f.state, &dc.u, &dc.e);
  std::vector<int> bidx(w.numVertices(), -1);
  for (int i = 0; i < w.numBoundary(); ++i) bidx[w.boundary[i]] = i;
  auto colorOf = [](int e) {
    return e > 0 ? ArcColor::Red : e < 0 ? ArcColor::Green : ArcColor::Black;
  };
  for (const Line& ln : linesOf(w, f)) {
    int steps = turnsOf(w, df, ln);
    if (ln.closed) {
      int full = 0;
      for (int x : c) full += x;
      dc.loops.push_back(colorOf(steps > 0 ? full : -full));
      continue;
    }
    int a = bidx[w.hv[ln.halves.front()]];
    int b = bidx[w.hv[w.twin[ln.halves.back()]]];
    int e = sweptExponent(c, opposite(df.positions[a]), steps);
    dc.arcs.push_back({b, a, e, colorOf(e)});
  }
  for (const auto& a : dc.arcs) {
    dc.weight += a.exponent;
    if (a.color == ArcColor::Red) ++dc.red;
    if (a.color == ArcColor::Green) ++dc.green;
  }
  for (ArcColor l : dc.loops) {
    if (l == ArcColor::Red) ++dc.red, ++dc.weight;
    if (l == ArcColor::Green) ++dc.green, --dc.weight;
  }
  return dc;
}

Expansion expandByDiscConfig(const Web& w) {
  DiscFrame df = discFrame(w);
  // the admissible states are those of the flow expansion; weights are
  // recomputed from the configurations alone
  Expansion full = expandByFlows(df.frame);
  Expansion out;
  out.signature = full.signature;
  for (const auto& [j, coeff] : full.coeffs) {
    LaurentPoly c;
    for (const Flow& fl : flowsAt(df.frame, j)) c.addTerm(configurationOf(df, fl).exponent(), 1);
    for (int i = 0; i < df.frame.web.loops; ++i) c *= quantumInt(3);
    if (!c.isZero()) out.coeffs[j] = c;
  }
  return out;
}

LaurentPoly coefficientByDiscConfig(const Web& w, const StateString& j) {
  DiscFrame df = discFrame(w);
  LaurentPoly c;
  for (const Flow& fl : flowsAt(df.frame, j)) c.addTerm(configurationOf(df, fl).exponent(), 1);
  for (int i = 0; i < df.frame.web.loops; ++i) c *= quantumInt(3);
  return c;
}

std::vector<RotationChart> calibrateRotationChart() {
  struct Case {
    DiscFrame df;
    Expansion target;
    std::map<StateString, std::vector<Flow>> flows;
  };
  // the one-vertex webs drawn as Y (first leg S or last leg S) and as lambda
  std::vector<Case> cases;
  for (Color c : {Color::White, Color::Black}) {
    for (double t : {0.0, 0.5, 0.9}) {
      Case k;
      if (!discFrameAt(tripod(c), t, &k.df)) throw WebError("calibration frame failed");
      k.target = expandByFlows(tripod(c));
      for (const auto& [j, co] : k.target.coeffs) k.flows[j] = flowsAt(k.df.frame, j);
      cases.push_back(std::move(k));
    }
  }
  std::vector<RotationChart> out;
  for (int code = 0; code < 729; ++code) {
    RotationChart chart;
    int x = code;
    for (int i = 0; i < 6; ++i) {
      chart[i] = x % 3 - 1;
      x /= 3;
    }
    bool ok = true;
    for (const Case& k : cases) {
      for (const auto& [j, co] : k.target.coeffs) {
        LaurentPoly p;
        for (const Flow& fl : k.flows.at(j)) p.addTerm(configurationOf(k.df, fl, chart).exponent(), 1);
        if (!(p == co)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(chart);
  }
  return out;
}

}  // namespace sl3web
