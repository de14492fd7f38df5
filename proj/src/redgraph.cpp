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


#include "sl3web/redgraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "sl3web/skein.hpp"

namespace sl3web {

FaceIndex faceIndex(const Web& w) {
  FaceIndex fi;
  fi.faces = internalFaces(w);
  fi.faceOf.assign(w.numHalfEdges(), -1);
  for (size_t f = 0; f < fi.faces.size(); ++f)
    for (int h : fi.faces[f]) fi.faceOf[h] = static_cast<int>(f);
  fi.around.assign(w.numVertices(), {});
  for (int v = 0; v < w.numVertices(); ++v) {
    if (!w.alive[v] || w.isBoundary(v)) continue;
    std::set<int> s;
    for (int h : w.rot[v])
      for (int x : {fi.faceOf[h], fi.faceOf[w.twin[h]]})
        if (x >= 0) s.insert(x);
    fi.around[v].assign(s.begin(), s.end());
  }
  fi.adj.assign(fi.faces.size(), {});
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (!w.alive[w.hv[h]] || h > w.twin[h]) continue;
    int a = fi.faceOf[h], b = fi.faceOf[w.twin[h]];
    if (a < 0 || b < 0 || a == b) continue;
    fi.adj[a].push_back(b);
    fi.adj[b].push_back(a);
  }
  return fi;
}

int RedGraph::twiceLevel() const {
  int sum = 0;
  for (int e : ed) sum += e;
  return 4 * static_cast<int>(faces.size()) - 2 * static_cast<int>(edges.size()) - sum;
}

std::string RedGraph::str() const {
  std::ostringstream o;
  o << "{";
  for (size_t i = 0; i < faces.size(); ++i) o << (i ? "," : "") << faces[i];
  o << "}";
  return o.str();
}

bool makeRedGraph(const Web& w, const FaceIndex& fi, const std::vector<int>& faces, RedGraph* out) {
  if (faces.empty()) return false;
  int F = static_cast<int>(fi.faces.size());
  std::vector<int> pos(F, -1);
  RedGraph g;
  g.faces = faces;
  std::sort(g.faces.begin(), g.faces.end());
  for (size_t i = 0; i < g.faces.size(); ++i) {
    if (g.faces[i] < 0 || g.faces[i] >= F || pos[g.faces[i]] >= 0) return false;
    pos[g.faces[i]] = static_cast<int>(i);
  }
  for (int v = 0; v < w.numVertices(); ++v) {
    int inside = 0;
    for (int f : fi.around[v]) inside += pos[f] >= 0;
    if (inside >= 3) return false;
  }
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (!w.alive[w.hv[h]] || h > w.twin[h]) continue;
    int a = fi.faceOf[h], b = fi.faceOf[w.twin[h]];
    if (a < 0 || b < 0 || a == b || pos[a] < 0 || pos[b] < 0) continue;
    g.edges.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
  }
  auto inG = [&](int f) { return f >= 0 && pos[f] >= 0; };
  g.gray.assign(g.faces.size(), {});
  g.ed.assign(g.faces.size(), 0);
  for (size_t i = 0; i < g.faces.size(); ++i) {
    int f = g.faces[i];
    for (int h : fi.faces[f]) {
      int x = w.hv[h];
      for (int o : w.rot[x]) {
        if (fi.faceOf[o] == f || fi.faceOf[w.twin[o]] == f) continue;
        if (inG(fi.faceOf[o]) || inG(fi.faceOf[w.twin[o]])) continue;
        g.gray[i].push_back(o);
      }
    }
    g.ed[i] = static_cast<int>(g.gray[i].size());
  }
  *out = std::move(g);
  return true;
}

std::vector<double> perVertexLevel(const RedGraph& g, const std::vector<int>& orientation) {
  std::vector<double> lv(g.faces.size());
  for (size_t i = 0; i < g.faces.size(); ++i) lv[i] = 2.0 - 0.5 * g.ed[i];
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int head = orientation[e] == 0 ? g.edges[e].second : g.edges[e].first;
    lv[head] -= 1.0;
  }
  return lv;
}

bool isAdmissible(const RedGraph& g, std::vector<int>* orientation) {
  int n = static_cast<int>(g.faces.size());
  std::vector<int> cap(n);
  for (int i = 0; i < n; ++i) {
    int twice = 4 - g.ed[i];
    if (twice < 0) return false;
    cap[i] = twice / 2;
  }
  int E = static_cast<int>(g.edges.size());
  std::vector<int> head(E, -1);
  std::vector<std::vector<int>> holding(n);
  // augmenting paths: edges choose heads, faces accept up to cap
  std::function<bool(int, std::vector<uint8_t>&)> place = [&](int e, std::vector<uint8_t>& seen) {
    for (int f : {g.edges[e].first, g.edges[e].second}) {
      if (seen[f]) continue;
      seen[f] = 1;
      if (static_cast<int>(holding[f].size()) < cap[f]) {
        holding[f].push_back(e);
        head[e] = f;
        return true;
      }
      for (size_t k = 0; k < holding[f].size(); ++k) {
        int other = holding[f][k];
        holding[f].erase(holding[f].begin() + k);
        if (place(other, seen)) {
          holding[f].push_back(e);
          head[e] = f;
          return true;
        }
        holding[f].insert(holding[f].begin() + k, other);
      }
    }
    return false;
  };
  for (int e = 0; e < E; ++e) {
    std::vector<uint8_t> seen(n, 0);
    if (!place(e, seen)) return false;
  }
  if (orientation) {
    orientation->assign(E, 0);
    for (int e = 0; e < E; ++e) (*orientation)[e] = head[e] == g.edges[e].second ? 0 : 1;
  }
  return true;
}

bool isExact(const RedGraph& g) { return g.twiceLevel() == 0 && isAdmissible(g); }

bool hasCycle(const RedGraph& g) {
  int n = static_cast<int>(g.faces.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return true;
    parent[ra] = rb;
  }
  return false;
}

int girth(const RedGraph& g) {
  int n = static_cast<int>(g.faces.size());
  int best = 0;
  for (size_t skip = 0; skip < g.edges.size(); ++skip) {
    // shortest path between the ends of `skip` avoiding it
    auto [s, t] = g.edges[skip];
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (size_t e = 0; e < g.edges.size(); ++e) {
        if (e == skip) continue;
        auto [a, b] = g.edges[e];
        int x = a == u ? b : b == u ? a : -1;
        if (x < 0 || dist[x] >= 0) continue;
        dist[x] = dist[u] + 1;
        q.push(x);
      }
    }
    if (dist[t] >= 0 && (best == 0 || dist[t] + 1 < best)) best = dist[t] + 1;
  }
  return best;
}

std::vector<RedGraph> enumerateRedGraphs(const Web& w, int maxFaces) {
  FaceIndex fi = faceIndex(w);
  int F = static_cast<int>(fi.faces.size());
  if (F > maxFaces) throw WebError("too many internal faces for exhaustive red-graph search");
  std::vector<std::vector<int>> verticesOf(F);
  for (int f = 0; f < F; ++f)
    for (int h : fi.faces[f]) verticesOf[f].push_back(w.hv[h]);
  std::vector<int> count(w.numVertices(), 0), chosen;
  std::vector<RedGraph> out;
  std::function<void(int)> rec = [&](int f) {
    if (f == F) {
      RedGraph g;
      if (makeRedGraph(w, fi, chosen, &g)) out.push_back(std::move(g));
      return;
    }
    rec(f + 1);
    bool ok = true;
    for (int v : verticesOf[f]) ok &= count[v] < 2;
    if (!ok) return;
    for (int v : verticesOf[f]) ++count[v];
    chosen.push_back(f);
    rec(f + 1);
    chosen.pop_back();
    for (int v : verticesOf[f]) --count[v];
  };
  rec(0);
  return out;
}

std::vector<RedGraph> exactRedGraphs(const Web& w, int maxFaces) {
  std::vector<RedGraph> out;
  for (auto& g : enumerateRedGraphs(w, maxFaces))
    if (isExact(g)) out.push_back(std::move(g));
  return out;
}

void forEachInducedFaceCycle(const Web& w, const FaceIndex& fi, size_t minLength,
                             const std::function<void(const std::vector<int>&)>& visit) {
  int F = static_cast<int>(fi.faces.size());
  std::vector<std::set<int>> nb(F);
  for (int f = 0; f < F; ++f) nb[f] = std::set<int>(fi.adj[f].begin(), fi.adj[f].end());
  // other faces at each vertex of f, for the external degree of a cycle face
  std::vector<std::vector<std::pair<int, int>>> corners(F);
  for (int f = 0; f < F; ++f)
    for (int h : fi.faces[f]) {
      std::vector<int> others;
      for (int g : fi.around[w.hv[h]])
        if (g != f) others.push_back(g);
      others.resize(2, -1);
      corners[f].emplace_back(others[0], others[1]);
    }
  auto edOk = [&](int f, int a, int b) {
    int ed = 0;
    for (auto [x, y] : corners[f])
      if (x != a && x != b && y != a && y != b) ++ed;
    return ed % 2 == 0 && ed <= 4;
  };
  std::vector<int> path;
  std::vector<uint8_t> onPath(F, 0);
  std::function<void(int)> extend = [&](int s) {
    int last = path.back();
    for (int x : nb[last]) {
      if (x <= s || onPath[x]) continue;
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size(); ++i) chord |= nb[x].count(path[i]) > 0;
      if (chord) continue;
      if (path.size() >= 2 && !edOk(last, path[path.size() - 2], x)) continue;
      if (path.size() >= 2 && nb[x].count(s)) {
        if (path.size() + 1 < minLength || path[1] > x) continue;
        if (!edOk(x, last, s) || !edOk(s, x, path[1])) continue;
        path.push_back(x);
        visit(path);
        path.pop_back();
        continue;
      }
      onPath[x] = 1;
      path.push_back(x);
      extend(s);
      path.pop_back();
      onPath[x] = 0;
    }
  };
  for (int s = 0; s < F; ++s) {
    path = {s};
    onPath[s] = 1;
    extend(s);
    onPath[s] = 0;
  }
}

std::vector<RedGraph> exactCycleRedGraphs(const Web& w) {
  FaceIndex fi = faceIndex(w);
  std::vector<RedGraph> out;
  forEachInducedFaceCycle(w, fi, 6, [&](const std::vector<int>& cyc) {
    RedGraph g;
    if (makeRedGraph(w, fi, cyc, &g) && isExact(g)) out.push_back(std::move(g));
  });
  return out;
}

bool hasExactRedGraph(const Web& w) {
  if (static_cast<int>(internalFaces(w).size()) <= 24) return !exactRedGraphs(w).empty();
  return !exactCycleRedGraphs(w).empty();
}

std::vector<Pairing> pairings(const Web& w, const RedGraph& g, size_t limit) {
  FaceSet fs = facesOf(w);
  std::vector<int> gray;
  for (const auto& v : g.gray) gray.insert(gray.end(), v.begin(), v.end());
  std::sort(gray.begin(), gray.end());
  int n = static_cast<int>(gray.size());
  std::vector<Pairing> out;
  if (n % 2) return out;
  auto compatible = [&](int a, int b) {
    if (w.color[w.hv[a]] == w.color[w.hv[b]]) return false;
    int fa[2] = {fs.faceOf[a], fs.faceOf[w.twin[a]]};
    int fb[2] = {fs.faceOf[b], fs.faceOf[w.twin[b]]};
    for (int x : fa)
      for (int y : fb)
        if (x == y && x >= 0) return true;
    return false;
  };
  std::vector<uint8_t> used(n, 0);
  Pairing cur;
  std::function<void()> rec = [&]() {
    if (out.size() >= limit) return;
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      try {
        Web r = gReduction(w, g, cur);
        if (eulerDefect(r) == 0) out.push_back(cur);
      } catch (const WebError&) {
      }
      return;
    }
    used[i] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[j] || !compatible(gray[i], gray[j])) continue;
      used[j] = 1;
      cur.emplace_back(gray[i], gray[j]);
      rec();
      cur.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
  return out;
}

Web gReduction(const Web& w, const RedGraph& g, const Pairing& p) {
  FaceIndex fi = faceIndex(w);
  std::vector<uint8_t> red(w.numVertices(), 0);
  for (int f : g.faces)
    for (int h : fi.faces[f]) red[w.hv[h]] = 1;
  std::vector<int> partner(w.numHalfEdges(), -1);
  std::set<int> gray;
  for (const auto& v : g.gray) gray.insert(v.begin(), v.end());
  for (auto [a, b] : p) {
    if (!gray.count(a) || !gray.count(b) || partner[a] >= 0 || partner[b] >= 0)
      throw WebError("pairing does not match the gray half-edges");
    partner[a] = b;
    partner[b] = a;
  }
  for (int x : gray)
    if (partner[x] < 0) throw WebError("pairing leaves a gray half-edge unpaired");
  Web r = w;
  std::vector<uint8_t> done(w.numHalfEdges(), 0);
  for (int o : gray) {
    int s = w.twin[o];
    if (red[w.hv[s]] || done[o]) continue;
    int cur = o;
    while (true) {
      done[cur] = 1;
      int q = partner[cur];
      done[q] = 1;
      int t = w.twin[q];
      if (!red[w.hv[t]]) {
        r.link(s, t);
        done[w.twin[t]] = 1;
        break;
      }
      if (!gray.count(t)) throw WebError("gray chain reaches a removed edge");
      cur = t;
    }
  }
  for (int o : gray) {
    if (done[o]) continue;
    int cur = o;
    while (!done[cur]) {
      done[cur] = 1;
      done[partner[cur]] = 1;
      cur = w.twin[partner[cur]];
    }
    ++r.loops;
  }
  for (int v = 0; v < w.numVertices(); ++v)
    if (red[v]) r.kill(v);
  for (int h = 0; h < r.numHalfEdges(); ++h)
    if (r.alive[r.hv[h]] && !r.alive[r.hv[r.twin[h]]]) throw WebError("G-reduction leaves a dangling edge");
  Web c = r.compacted();
  c.validate();
  return c;
}

WebCombo reduceByRedGraph(const Web& w, const RedGraph& g, const Pairing& p) {
  return reduceToBasis(gReduction(w, g, p));
}

nlohmann::json redGraphToJson(const RedGraph& g, const std::vector<Pairing>& ps) {
  nlohmann::json j;
  j["faces"] = g.faces;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({g.faces[a], g.faces[b]});
  j["ed"] = g.ed;
  j["level"] = g.twiceLevel() / 2.0;
  j["admissible"] = isAdmissible(g);
  j["exact"] = isExact(g);
  j["pairings"] = nlohmann::json::array();
  for (const auto& p : ps) {
    nlohmann::json q = nlohmann::json::array();
    for (auto [a, b] : p) q.push_back({a, b});
    j["pairings"].push_back(q);
  }
  return j;
}

}  // namespace sl3web
