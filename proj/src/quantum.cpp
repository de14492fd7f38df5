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

#include "sl3web/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>

namespace sl3web {

namespace {

using VPoly = std::map<int, uint64_t>;

void addInto(VPoly& into, const VPoly& from, int shift) {
  for (const auto& [e, c] : from) into[e + shift] += c;
}

LaurentPoly toLaurent(const VPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    r.addTerm(e, mpq_class(z));
  }
  return r;
}

int inversions(const std::vector<int>& t) {
  int inv = 0;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t k = i + 1; k < t.size(); ++k)
      if (t[i] < t[k]) ++inv;
  return inv;
}

bool isPermutation(const std::vector<int>& t) {
  if (t.size() != 3) return false;
  int seen = 0;
  for (int x : t) {
    if (x < -1 || x > 1) return false;
    seen |= 1 << (x + 1);
  }
  return seen == 7;
}

double angleOf(Pt from, Pt to) { return std::atan2(to.y - from.y, to.x - from.x); }

}  // namespace

LaurentPoly Expansion::at(const StateString& j) const {
  auto it = coeffs.find(j);
  return it == coeffs.end() ? LaurentPoly() : it->second;
}

int cupExponent(int left) { return left - 1; }
int capExponent(int left) { return 1 + left; }
int tExponent(int a, int b, int c) { return -inversions({a, b, c}); }

bool vertexExponent(const std::vector<int>& up, const std::vector<int>& down, int* exponent) {
  std::vector<int> t = up;
  for (auto it = down.rbegin(); it != down.rend(); ++it) t.push_back(-*it);
  if (!isPermutation(t)) return false;
  int e = -inversions(t);
  for (int d : down) e += 1 - d;
  *exponent = e;
  return true;
}

bool yWeight(int a, int u1, int u2, int* exponent) {
  if (u1 + u2 != a || u1 == u2 || a < -1 || a > 1) return false;
  *exponent = u1 > u2 ? 0 : -1;
  return true;
}

bool lambdaWeight(int d1, int d2, int u, int* exponent) {
  if (d1 + d2 != u || d1 == d2 || u < -1 || u > 1) return false;
  *exponent = d1 > d2 ? 1 : 0;
  return true;
}

HeightFrame heightFrame(const Web& w, uint64_t seed) {
  if (w.numCrossings() > 0) throw WebError("quantum evaluation needs a crossing-free web");
  for (int b : w.boundary)
    if (w.degree(b) != 1) throw WebError("quantum evaluation needs an unclasped web");
  HeightFrame f;
  f.web = w.compacted();
  Layout base = tutteLayout(f.web, LayoutFrame::UpperHalf, seed);
  std::string key = canonicalKey(f.web);
  std::mt19937_64 rng(seed * 2654435761ULL + 17);
  bool ok = false;
  for (double amp : {1e-3, 1e-4, 1e-5, 1e-6, 0.0}) {
    std::uniform_real_distribution<double> d(-amp, amp);
    Layout lay = base;
    for (int v = 0; v < f.web.numVertices(); ++v) {
      if (f.web.isBoundary(v)) continue;
      lay.vpos[v].x += d(rng);
      lay.vpos[v].y += d(rng);
    }
    for (int h = 0; h < f.web.numHalfEdges(); ++h) {
      if (h > f.web.twin[h]) continue;
      lay.mid[h].x += d(rng);
      lay.mid[h].y += d(rng);
      lay.mid[f.web.twin[h]] = lay.mid[h];
    }
    try {
      Web back = webFromDrawing(drawingOf(f.web, lay));
      if (back.numCrossings() == 0 && canonicalKey(back) == key) {
        f.layout = lay;
        ok = true;
        break;
      }
    } catch (const WebError&) {
    }
  }
  if (!ok) throw WebError("no generic height function found");
  for (int b : f.web.boundary) f.top.push_back({f.layout.vpos[b].x, 3.0});
  f.route.assign(f.top.size(), {});
  return f;
}

namespace {

// Polyline of an edge from hv[h] to hv[twin[h]], including the vertical
// continuation of boundary legs.
std::vector<Pt> polyline(const HeightFrame& f, int h) {
  const Web& w = f.web;
  std::vector<Pt> pts;
  int a = w.hv[h], b = w.hv[w.twin[h]];
  auto leg = [&](int v) {
    std::vector<Pt> r;
    for (int i = 0; i < w.numBoundary(); ++i) {
      if (w.boundary[i] != v) continue;
      if (i < static_cast<int>(f.route.size())) r = f.route[i];
      r.push_back(f.top[i]);
    }
    return r;
  };
  if (w.isBoundary(a)) {
    auto r = leg(a);
    pts.insert(pts.end(), r.rbegin(), r.rend());
  }
  pts.push_back(f.layout.vpos[a]);
  pts.push_back(f.layout.mid[h]);
  pts.push_back(f.layout.vpos[b]);
  if (w.isBoundary(b)) {
    auto r = leg(b);
    pts.insert(pts.end(), r.begin(), r.end());
  }
  return pts;
}

int boundaryIndex(const Web& w, int v) {
  for (int i = 0; i < w.numBoundary(); ++i)
    if (w.boundary[i] == v) return i;
  return -1;
}

LaurentPoly loopFactor(const Web& w) {
  LaurentPoly r(1);
  for (int i = 0; i < w.loops; ++i) r *= quantumInt(3);
  return r;
}

}  // namespace

Expansion expandByContraction(const Web& w0, uint64_t seed) {
  return expandByContraction(heightFrame(w0, seed));
}

Expansion expandByContraction(const HeightFrame& f) {
  const Web& w = f.web;
  int n = w.numBoundary();
  // points: vertices, then one bend per edge, then tops
  struct Point {
    Pt p;
    int vertex = -1;  // internal vertex, or -1 for a bend
    bool top = false;
  };
  std::vector<Point> pts;
  std::vector<int> vpoint(w.numVertices(), -1);
  for (int v = 0; v < w.numVertices(); ++v) {
    vpoint[v] = static_cast<int>(pts.size());
    pts.push_back({f.layout.vpos[v], w.isInternal(v) ? v : -1, false});
  }
  struct Seg {
    int lo, hi;
  };
  std::vector<Seg> segs;
  auto addSeg = [&](int a, int b) {
    if (pts[a].p.y > pts[b].p.y) std::swap(a, b);
    if (pts[a].p.y == pts[b].p.y) throw WebError("horizontal segment in height function");
    segs.push_back({a, b});
  };
  std::vector<int> topSeg(n, -1);
  for (int i = 0; i < n; ++i) {
    int prev = vpoint[w.boundary[i]];
    if (i < static_cast<int>(f.route.size())) {
      for (Pt p : f.route[i]) {
        int r = static_cast<int>(pts.size());
        pts.push_back({p, -1, false});
        addSeg(prev, r);
        prev = r;
      }
    }
    int t = static_cast<int>(pts.size());
    pts.push_back({f.top[i], -1, true});
    topSeg[i] = static_cast<int>(segs.size());
    addSeg(prev, t);
  }
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (h > w.twin[h]) continue;
    int m = static_cast<int>(pts.size());
    pts.push_back({f.layout.mid[h], -1, false});
    addSeg(vpoint[w.hv[h]], m);
    addSeg(m, vpoint[w.hv[w.twin[h]]]);
  }
  std::vector<std::vector<int>> below(pts.size()), above(pts.size());
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    below[segs[s].hi].push_back(s);
    above[segs[s].lo].push_back(s);
  }
  std::vector<int> events;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (!pts[i].top) events.push_back(i);
  std::sort(events.begin(), events.end(), [&](int a, int b) {
    if (pts[a].p.y != pts[b].p.y) return pts[a].p.y < pts[b].p.y;
    return pts[a].p.x < pts[b].p.x;
  });
  auto xAt = [&](int s, double y) {
    Pt a = pts[segs[s].lo].p, b = pts[segs[s].hi].p;
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
  };
  std::vector<int> frontier;
  std::unordered_map<std::string, VPoly> table;
  table[""][0] = 1;
  for (int ev : events) {
    const Point& P = pts[ev];
    std::vector<int> up = above[ev];
    std::sort(up.begin(), up.end(), [&](int a, int b) {
      return angleOf(P.p, pts[segs[a].hi].p) > angleOf(P.p, pts[segs[b].hi].p);
    });
    int q = static_cast<int>(below[ev].size()), p = static_cast<int>(up.size());
    int at = 0;
    if (q > 0) {
      std::vector<int> pos;
      for (int s : below[ev]) {
        auto it = std::find(frontier.begin(), frontier.end(), s);
        if (it == frontier.end()) throw WebError("sweep lost a strand");
        pos.push_back(static_cast<int>(it - frontier.begin()));
      }
      std::sort(pos.begin(), pos.end());
      if (pos.back() - pos.front() != q - 1) throw WebError("sweep strands are not adjacent");
      at = pos.front();
    } else {
      for (int s : frontier)
        if (xAt(s, P.p.y) < P.p.x) ++at;
    }
    std::unordered_map<std::string, VPoly> next;
    int combos = 1;
    for (int i = 0; i < p; ++i) combos *= 3;
    for (const auto& [key, val] : table) {
      std::vector<int> d(q);
      for (int i = 0; i < q; ++i) d[i] = key[at + i] - '1';
      for (int c = 0; c < combos; ++c) {
        std::vector<int> u(p);
        int x = c;
        for (int i = 0; i < p; ++i) {
          u[i] = x % 3 - 1;
          x /= 3;
        }
        int e = 0;
        if (P.vertex >= 0) {
          if (!vertexExponent(u, d, &e)) continue;
        } else if (p == 1 && q == 1) {
          if (u[0] != d[0]) continue;
        } else if (p == 2 && q == 0) {
          if (u[1] != -u[0]) continue;
          e = cupExponent(u[0]);
        } else if (p == 0 && q == 2) {
          if (d[1] != -d[0]) continue;
          e = capExponent(d[0]);
        } else {
          throw WebError("unexpected critical point in sweep");
        }
        std::string nk = key.substr(0, at);
        for (int i = 0; i < p; ++i) nk.push_back(static_cast<char>('1' + u[i]));
        nk += key.substr(at + q);
        addInto(next[nk], val, e);
      }
    }
    table = std::move(next);
    std::vector<int> nf(frontier.begin(), frontier.begin() + at);
    nf.insert(nf.end(), up.begin(), up.end());
    nf.insert(nf.end(), frontier.begin() + at + q, frontier.end());
    frontier = std::move(nf);
  }
  if (static_cast<int>(frontier.size()) != n) throw WebError("sweep ended with stray strands");
  for (int i = 0; i < n; ++i)
    if (frontier[i] != topSeg[i]) throw WebError("sweep ended out of boundary order");
  Expansion out;
  out.signature = signatureOf(w);
  LaurentPoly loops = loopFactor(w);
  for (const auto& [key, val] : table) {
    if (val.empty()) continue;
    StateString j(n);
    for (int i = 0; i < n; ++i) j[i] = key[i] - '1';
    LaurentPoly c = toLaurent(val) * loops;
    if (!c.isZero()) out.coeffs[j] = c;
  }
  return out;
}

namespace {

// Flow model: edges carry a direction, vertices and bends carry weights.
struct FlowModel {
  const Web* w = nullptr;
  std::vector<int> edgeHalf;
  std::vector<int> edgeOfHalf;
  std::vector<std::array<int, 3>> edgeExp;  // by dir + 1
  // vertex exponent by tlabel code (3 rot positions, base 3), or INT_MIN
  std::vector<std::vector<int>> vertexExp;
  std::vector<int> order;
};

constexpr int kBad = -1000000;

FlowModel buildModel(const HeightFrame& f) {
  FlowModel m;
  const Web& w = f.web;
  m.w = &f.web;
  m.edgeOfHalf.assign(w.numHalfEdges(), -1);
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (h > w.twin[h]) continue;
    int e = static_cast<int>(m.edgeHalf.size());
    m.edgeHalf.push_back(h);
    m.edgeOfHalf[h] = m.edgeOfHalf[w.twin[h]] = e;
    auto pl = polyline(f, h);
    std::array<int, 3> ex{0, 0, 0};
    for (int dir = -1; dir <= 1; ++dir) {
      const std::vector<Pt>& P = pl;
      // upward flux of segment (P[k], P[k+1]); dir = +1 runs with increasing k
      auto flux = [&](size_t k) {
        int sgnUp = P[k + 1].y > P[k].y ? 1 : -1;
        return dir * sgnUp;
      };
      int total = 0;
      for (size_t k = 1; k + 1 < P.size(); ++k) {
        bool prevAbove = P[k - 1].y > P[k].y, nextAbove = P[k + 1].y > P[k].y;
        if (prevAbove != nextAbove) continue;
        double aPrev = angleOf(P[k], P[k - 1]), aNext = angleOf(P[k], P[k + 1]);
        if (prevAbove) {
          bool prevLeft = aPrev > aNext;
          int j = prevLeft ? flux(k - 1) : flux(k);
          total += cupExponent(j);
        } else {
          bool prevLeft = aPrev < aNext;
          int j = prevLeft ? flux(k - 1) : flux(k);
          total += capExponent(j);
        }
      }
      ex[dir + 1] = total;
    }
    m.edgeExp.push_back(ex);
  }
  m.vertexExp.assign(w.numVertices(), {});
  for (int v = 0; v < w.numVertices(); ++v) {
    if (!w.isInternal(v)) continue;
    std::vector<int> ups, downs;  // rot positions
    for (int i = 0; i < 3; ++i) {
      int h = w.rot[v][i];
      (f.layout.mid[h].y > f.layout.vpos[v].y ? ups : downs).push_back(i);
    }
    Pt c = f.layout.vpos[v];
    std::sort(ups.begin(), ups.end(), [&](int a, int b) {
      return angleOf(c, f.layout.mid[w.rot[v][a]]) > angleOf(c, f.layout.mid[w.rot[v][b]]);
    });
    std::sort(downs.begin(), downs.end(), [&](int a, int b) {
      return angleOf(c, f.layout.mid[w.rot[v][a]]) < angleOf(c, f.layout.mid[w.rot[v][b]]);
    });
    std::vector<int> tab(27, kBad);
    for (int code = 0; code < 27; ++code) {
      int t[3] = {code % 3 - 1, (code / 3) % 3 - 1, code / 9 - 1};
      if (!isPermutation({t[0], t[1], t[2]})) continue;
      // upward flux: up legs carry the outgoing label, down legs its negative
      std::vector<int> u, d;
      for (int i : ups) u.push_back(t[i]);
      for (int i : downs) d.push_back(-t[i]);
      int e = 0, e2 = 0;
      bool ok = false;
      if (u.size() == 2) {
        ok = yWeight(d[0], u[0], u[1], &e);
      } else if (u.size() == 1) {
        ok = lambdaWeight(d[0], d[1], u[0], &e);
      } else if (u.size() == 3) {
        ok = yWeight(-u[0], u[1], u[2], &e);
        e += cupExponent(u[0]);
      } else {
        ok = lambdaWeight(d[0], d[1], -d[2], &e2);
        e = e2 + capExponent(-d[2]);
      }
      if (ok) tab[code] = e;
    }
    m.vertexExp[v] = tab;
  }
  // greedy order keeping the open edge set small, swept from the left
  int V = w.numVertices();
  std::vector<uint8_t> done(V, 0);
  std::vector<int> openCount(m.edgeHalf.size(), 0);
  for (int step = 0; step < V; ++step) {
    int best = -1;
    std::pair<int, double> bestScore{1 << 30, 0};
    for (int v = 0; v < V; ++v) {
      if (done[v] || !w.alive[v]) continue;
      int fresh = 0, closing = 0;
      for (int h : w.rot[v]) (openCount[m.edgeOfHalf[h]] ? ++closing : ++fresh);
      std::pair<int, double> score{fresh - closing, f.layout.vpos[v].x};
      if (score < bestScore) {
        bestScore = score;
        best = v;
      }
    }
    if (best < 0) break;
    done[best] = 1;
    m.order.push_back(best);
    for (int h : w.rot[best]) openCount[m.edgeOfHalf[h]] = 1;
  }
  return m;
}

enum class Record { None, Boundary };

struct DPResult {
  std::vector<std::unordered_map<std::string, VPoly>> layers;
  std::vector<std::vector<int>> frontiers;
};

// fixed[i] in {-1, 0, 1} or 2 for free. With record, keys end with the
// boundary labels in boundary order.
DPResult runFlowDP(const FlowModel& m, const std::vector<int>& fixed, Record rec,
                   bool keepLayers, bool existenceOnly) {
  const Web& w = *m.w;
  int n = w.numBoundary();
  std::vector<int> bidx(w.numVertices(), -1);
  for (int i = 0; i < n; ++i) bidx[w.boundary[i]] = i;
  DPResult res;
  std::vector<int> frontier;
  std::unordered_map<std::string, VPoly> table;
  std::string init = rec == Record::Boundary ? std::string(n, '?') : std::string();
  table[init][0] = 1;
  std::vector<int> remaining(m.edgeHalf.size(), 2);
  if (keepLayers) {
    res.layers.push_back(table);
    res.frontiers.push_back(frontier);
  }
  for (int v : m.order) {
    const auto& rot = w.rot[v];
    int deg = static_cast<int>(rot.size());
    std::vector<int> es(deg), posIn(deg, -1);
    std::vector<int> freshEdges;
    for (int i = 0; i < deg; ++i) {
      es[i] = m.edgeOfHalf[rot[i]];
      auto it = std::find(frontier.begin(), frontier.end(), es[i]);
      if (it != frontier.end()) posIn[i] = static_cast<int>(it - frontier.begin());
      else freshEdges.push_back(i);
    }
    std::vector<int> nf;
    std::vector<int> keepFrom;  // index in old frontier or -(1 + rot pos)
    for (size_t k = 0; k < frontier.size(); ++k) {
      bool closes = false;
      for (int i = 0; i < deg; ++i)
        if (posIn[i] == static_cast<int>(k)) closes = true;
      if (!closes) {
        nf.push_back(frontier[k]);
        keepFrom.push_back(static_cast<int>(k));
      }
    }
    for (int i : freshEdges) {
      nf.push_back(es[i]);
      keepFrom.push_back(-1 - i);
    }
    int fn = static_cast<int>(freshEdges.size());
    int combos = 1;
    for (int i = 0; i < fn; ++i) combos *= 3;
    int fl = static_cast<int>(frontier.size());
    std::unordered_map<std::string, VPoly> next;
    std::vector<int> dir(deg), tl(deg);
    for (const auto& [key, val] : table) {
      for (int c = 0; c < combos; ++c) {
        int x = c;
        for (int i = 0; i < deg; ++i) {
          if (posIn[i] >= 0) {
            dir[i] = key[posIn[i]] - '1';
          } else {
            dir[i] = x % 3 - 1;
            x /= 3;
          }
          // tlabel at v: +1 when the flow leaves v
          tl[i] = (w.hv[m.edgeHalf[es[i]]] == v) ? dir[i] : -dir[i];
        }
        int e = 0;
        std::string tail;
        if (w.isInternal(v)) {
          int code = (tl[0] + 1) + 3 * (tl[1] + 1) + 9 * (tl[2] + 1);
          int ve = m.vertexExp[v][code];
          if (ve == kBad) continue;
          e += ve;
        } else {
          int j = -tl[0];
          int b = bidx[v];
          if (fixed[b] != 2 && fixed[b] != j) continue;
          if (rec == Record::Boundary) {
            tail = key.substr(fl);
            tail[b] = static_cast<char>('1' + j);
          }
        }
        for (int i : freshEdges) e += m.edgeExp[es[i]][dir[i] + 1];
        std::string nk;
        for (int k : keepFrom) {
          if (k >= 0) nk.push_back(key[k]);
          else nk.push_back(static_cast<char>('1' + dir[-1 - k]));
        }
        if (rec == Record::Boundary) nk += w.isInternal(v) ? key.substr(fl) : tail;
        if (existenceOnly) {
          next[nk][0] = 1;
        } else {
          addInto(next[nk], val, e);
        }
      }
    }
    table = std::move(next);
    frontier = std::move(nf);
    if (keepLayers) {
      res.layers.push_back(table);
      res.frontiers.push_back(frontier);
    }
    if (table.empty()) break;
  }
  if (!keepLayers) {
    res.layers.push_back(std::move(table));
    res.frontiers.push_back(frontier);
  }
  return res;
}

}  // namespace

Expansion expandByFlows(const Web& w0, uint64_t seed) { return expandByFlows(heightFrame(w0, seed)); }

Expansion expandByFlows(const HeightFrame& f) {
  FlowModel m = buildModel(f);
  int n = f.web.numBoundary();
  DPResult r = runFlowDP(m, std::vector<int>(n, 2), Record::Boundary, false, false);
  Expansion out;
  out.signature = signatureOf(f.web);
  LaurentPoly loops = loopFactor(f.web);
  for (const auto& [key, val] : r.layers.back()) {
    StateString j(n);
    for (int i = 0; i < n; ++i) j[i] = key[key.size() - n + i] - '1';
    LaurentPoly c = toLaurent(val) * loops;
    if (!c.isZero()) out.coeffs[j] = c;
  }
  return out;
}

LaurentPoly coefficientAt(const Web& w0, const StateString& j, uint64_t seed) {
  HeightFrame f = heightFrame(w0, seed);
  if (static_cast<int>(j.size()) != f.web.numBoundary()) throw WebError("state length mismatch");
  FlowModel m = buildModel(f);
  DPResult r = runFlowDP(m, j, Record::None, false, false);
  const auto& last = r.layers.back();
  auto it = last.find("");
  if (it == last.end()) return LaurentPoly();
  return toLaurent(it->second) * loopFactor(f.web);
}

StateString dominantPath(const Web& w0, uint64_t seed) {
  if (w0.numBoundary() == 0) return {};
  HeightFrame f = heightFrame(w0, seed);
  FlowModel m = buildModel(f);
  int n = f.web.numBoundary();
  std::vector<int> fixed(n, 2);
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int lab : {1, 0, -1}) {
      fixed[i] = lab;
      DPResult r = runFlowDP(m, fixed, Record::None, false, true);
      if (r.layers.back().count("")) {
        found = true;
        break;
      }
    }
    if (!found) throw WebError("web admits no flow");
  }
  return fixed;
}

std::vector<Flow> flowsAt(const Web& w0, const StateString& j, const int* exponent, uint64_t seed) {
  return flowsAt(heightFrame(w0, seed), j, exponent);
}

std::vector<Flow> flowsAt(const HeightFrame& f, const StateString& j, const int* exponent) {
  const Web& w = f.web;
  FlowModel m = buildModel(f);
  DPResult r = runFlowDP(m, j, Record::None, true, false);
  std::vector<Flow> out;
  if (r.layers.size() != m.order.size() + 1 || !r.layers.back().count("")) return out;
  int E = static_cast<int>(m.edgeHalf.size());
  std::vector<int> dir(E, 0);
  // walk back through the layers, re-deriving each transition
  std::function<void(int, const std::string&, int, int)> back = [&](int k, const std::string& key,
                                                                    int target, int total) {
    if (k == 0) {
      if (target != 0) return;
      Flow fl;
      fl.edgeHalf = m.edgeHalf;
      fl.dir = dir;
      fl.state = j;
      fl.exponent = total;
      out.push_back(fl);
      return;
    }
    int v = m.order[k - 1];
    const auto& prevF = r.frontiers[k - 1];
    const auto& curF = r.frontiers[k];
    const auto& rot = w.rot[v];
    for (const auto& [pk, pval] : r.layers[k - 1]) {
      // edges of v: labels from the previous key or the current key
      std::vector<int> d(rot.size());
      bool consistent = true;
      int e = 0;
      for (size_t i = 0; i < rot.size() && consistent; ++i) {
        int ed = m.edgeOfHalf[rot[i]];
        auto ip = std::find(prevF.begin(), prevF.end(), ed);
        auto ic = std::find(curF.begin(), curF.end(), ed);
        if (ip != prevF.end()) {
          d[i] = pk[ip - prevF.begin()] - '1';
          if (ic != curF.end() && key[ic - curF.begin()] - '1' != d[i]) consistent = false;
        } else {
          if (ic == curF.end()) {
            // opened and closed here cannot happen for simple edges
            consistent = false;
            break;
          }
          d[i] = key[ic - curF.begin()] - '1';
          e += m.edgeExp[ed][d[i] + 1];
        }
      }
      if (!consistent) continue;
      // untouched frontier edges must agree
      for (size_t q = 0; q < prevF.size() && consistent; ++q) {
        auto ic = std::find(curF.begin(), curF.end(), prevF[q]);
        if (ic != curF.end() && key[ic - curF.begin()] != pk[q]) consistent = false;
      }
      if (!consistent) continue;
      std::vector<int> tl(rot.size());
      for (size_t i = 0; i < rot.size(); ++i) {
        int ed = m.edgeOfHalf[rot[i]];
        tl[i] = w.hv[m.edgeHalf[ed]] == v ? d[i] : -d[i];
      }
      if (w.isInternal(v)) {
        int code = (tl[0] + 1) + 3 * (tl[1] + 1) + 9 * (tl[2] + 1);
        if (m.vertexExp[v][code] == kBad) continue;
        e += m.vertexExp[v][code];
      } else {
        int b = 0;
        while (w.boundary[b] != v) ++b;
        if (-tl[0] != j[b]) continue;
      }
      auto it = pval.find(target - e);
      if (it == pval.end() || it->second == 0) continue;
      std::vector<int> saved;
      for (size_t i = 0; i < rot.size(); ++i) saved.push_back(dir[m.edgeOfHalf[rot[i]]]);
      for (size_t i = 0; i < rot.size(); ++i) dir[m.edgeOfHalf[rot[i]]] = d[i];
      back(k - 1, pk, target - e, total);
      for (size_t i = 0; i < rot.size(); ++i) dir[m.edgeOfHalf[rot[i]]] = saved[i];
    }
  };
  const VPoly& fin = r.layers.back().at("");
  for (const auto& [ex, cnt] : fin) {
    if (exponent && ex != *exponent) continue;
    back(static_cast<int>(m.order.size()), "", ex, ex);
  }
  return out;
}

bool leadingTermLaw(const Expansion& e, StateString* leader) {
  if (e.coeffs.empty()) return false;
  const auto& [j, c] = *e.coeffs.rbegin();
  if (leader) *leader = j;
  return c == LaurentPoly(1);
}

bool nonnegative(const Expansion& e) {
  for (const auto& [j, c] : e.coeffs)
    if (!c.nonnegativeIntegral()) return false;
  return true;
}

}  // namespace sl3web
