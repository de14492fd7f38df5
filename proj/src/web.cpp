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

#include "sl3web/web.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <unordered_map>

namespace sl3web {

char colorChar(Color c) { return c == Color::White ? 'w' : 'b'; }

std::string Signature::str() const {
  std::string s;
  for (Color c : letters) s += colorChar(c);
  return s;
}

Signature Signature::parse(const std::string& s) {
  Signature sig;
  for (char ch : s) {
    if (ch == 'w' || ch == 'o') {
      sig.letters.push_back(Color::White);
    } else if (ch == 'b' || ch == 'x') {
      sig.letters.push_back(Color::Black);
    } else if (ch == ' ' || ch == '|' || ch == ',') {
      continue;
    } else {
      throw WebError(std::string("bad signature letter '") + ch + "'");
    }
  }
  return sig;
}

int Signature::whites() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), Color::White));
}

int Signature::blacks() const { return static_cast<int>(letters.size()) - whites(); }

int Web::addVertex(VertexKind k, Color c) {
  kind.push_back(k);
  color.push_back(c);
  rot.emplace_back();
  over.push_back(-1);
  alive.push_back(1);
  return numVertices() - 1;
}

int Web::newHalfEdge(int v) {
  hv.push_back(v);
  twin.push_back(-1);
  rot[v].push_back(numHalfEdges() - 1);
  return numHalfEdges() - 1;
}

int Web::rotIndex(int h) const {
  const auto& r = rot[hv[h]];
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == h) return static_cast<int>(i);
  throw WebError("half-edge missing from its rotation");
}

int Web::rotNext(int h, int step) const {
  const auto& r = rot[hv[h]];
  int d = static_cast<int>(r.size());
  int i = rotIndex(h);
  return r[((i + step) % d + d) % d];
}

int Web::numInternal() const {
  int n = 0;
  for (int v = 0; v < numVertices(); ++v)
    if (alive[v] && kind[v] == VertexKind::Internal) ++n;
  return n;
}

int Web::numCrossings() const {
  int n = 0;
  for (int v = 0; v < numVertices(); ++v)
    if (alive[v] && kind[v] == VertexKind::Crossing) ++n;
  return n;
}

int Web::numEdges() const {
  int n = 0;
  for (int h = 0; h < numHalfEdges(); ++h)
    if (alive[hv[h]]) ++n;
  return n / 2;
}

int Web::strandEnd(int h) const {
  int cur = h;
  int guard = numHalfEdges() + 2;
  while (guard-- > 0) {
    int t = twin[cur];
    int u = hv[t];
    if (kind[u] != VertexKind::Crossing) return t;
    cur = rotNext(t, 2);
    if (cur == h) return -1;
  }
  return -1;
}

Color Web::strandColor(int h) const {
  int e = strandEnd(h);
  if (e < 0) return Color::White;
  return color[hv[e]];
}

void Web::kill(int v) { alive[v] = 0; }

Web Web::compacted() const {
  Web out;
  std::vector<int> vmap(numVertices(), -1), hmap(numHalfEdges(), -1);
  for (int v = 0; v < numVertices(); ++v) {
    if (!alive[v]) continue;
    vmap[v] = out.addVertex(kind[v], color[v]);
    out.over[vmap[v]] = over[v];
  }
  int next = 0;
  for (int h = 0; h < numHalfEdges(); ++h)
    if (alive[hv[h]]) hmap[h] = next++;
  out.hv.assign(next, -1);
  out.twin.assign(next, -1);
  for (int h = 0; h < numHalfEdges(); ++h) {
    if (hmap[h] < 0) continue;
    out.hv[hmap[h]] = vmap[hv[h]];
    if (twin[h] < 0 || hmap[twin[h]] < 0) throw WebError("compaction: dangling half-edge");
    out.twin[hmap[h]] = hmap[twin[h]];
  }
  for (int v = 0; v < numVertices(); ++v) {
    if (!alive[v]) continue;
    auto& r = out.rot[vmap[v]];
    r.reserve(rot[v].size());
    for (int h : rot[v]) r.push_back(hmap[h]);
  }
  for (int b : boundary) out.boundary.push_back(vmap[b]);
  out.loops = loops;
  return out;
}

std::vector<int> componentOf(const Web& w, int* count) {
  int n = w.numVertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int h = 0; h < w.numHalfEdges(); ++h)
    if (w.alive[w.hv[h]]) unite(w.hv[h], w.hv[w.twin[h]]);
  for (size_t i = 1; i < w.boundary.size(); ++i) unite(w.boundary[i - 1], w.boundary[i]);
  std::vector<int> comp(n, -1), label(n, -1);
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (!w.alive[v]) continue;
    int r = find(v);
    if (label[r] < 0) label[r] = c++;
    comp[v] = label[r];
  }
  if (count) *count = c;
  return comp;
}

namespace {

struct Extended {
  std::vector<std::vector<int>> rot;
  std::vector<int> hv, twin, pos;
  int real = 0;
};

Extended extend(const Web& w) {
  Extended x;
  x.real = w.numHalfEdges();
  x.hv = w.hv;
  x.twin = w.twin;
  int n = w.numBoundary();
  std::vector<int> arcNext(n), arcPrev(n);
  for (int i = 0; i < n; ++i) {
    int a = static_cast<int>(x.hv.size());
    x.hv.push_back(w.boundary[i]);
    x.hv.push_back(w.boundary[(i + 1) % n]);
    x.twin.push_back(a + 1);
    x.twin.push_back(a);
    arcNext[i] = a;
    arcPrev[(i + 1) % n] = a + 1;
  }
  x.rot.resize(w.numVertices());
  for (int v = 0; v < w.numVertices(); ++v)
    if (w.alive[v] && !w.isBoundary(v)) x.rot[v] = w.rot[v];
  for (int i = 0; i < n; ++i) {
    int b = w.boundary[i];
    auto& r = x.rot[b];
    r.push_back(arcNext[i]);
    for (auto it = w.rot[b].rbegin(); it != w.rot[b].rend(); ++it) r.push_back(*it);
    r.push_back(arcPrev[i]);
  }
  x.pos.assign(x.hv.size(), -1);
  for (int v = 0; v < w.numVertices(); ++v)
    for (size_t i = 0; i < x.rot[v].size(); ++i) x.pos[x.rot[v][i]] = static_cast<int>(i);
  return x;
}

}  // namespace

FaceSet facesOf(const Web& w) {
  Extended x = extend(w);
  int H = static_cast<int>(x.hv.size());
  std::vector<int> seen(H, -1);
  FaceSet fs;
  fs.faceOf.assign(w.numHalfEdges(), -1);
  for (int s = 0; s < H; ++s) {
    if (seen[s] >= 0) continue;
    if (!w.alive[x.hv[s]]) continue;
    int fid = static_cast<int>(fs.faces.size());
    std::vector<int> face;
    bool hasArc = false;
    int h = s;
    do {
      seen[h] = fid;
      if (h < x.real) {
        face.push_back(h);
        fs.faceOf[h] = fid;
      } else {
        hasArc = true;
      }
      int t = x.twin[h];
      const auto& r = x.rot[x.hv[t]];
      h = r[(x.pos[t] + 1) % r.size()];
    } while (h != s);
    fs.faces.push_back(std::move(face));
    fs.internal.push_back(hasArc ? 0 : 1);
  }
  for (int i = 0; i < w.numBoundary(); ++i) fs.arcFace.push_back(seen[x.real + 2 * i + 1]);
  return fs;
}

std::vector<std::vector<int>> internalFaces(const Web& w) {
  FaceSet fs = facesOf(w);
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < fs.faces.size(); ++i) {
    if (!fs.internal[i]) continue;
    // a face between two legs of a clasp counts as a boundary face
    bool clasped = false;
    for (int h : fs.faces[i]) clasped |= w.isBoundary(w.hv[h]);
    if (!clasped) out.push_back(fs.faces[i]);
  }
  return out;
}

int eulerDefect(const Web& w) {
  int comps = 0;
  componentOf(w, &comps);
  int V = 0;
  for (int v = 0; v < w.numVertices(); ++v) V += w.alive[v];
  int E = w.numEdges() + w.numBoundary();
  int F = static_cast<int>(facesOf(w).faces.size());
  return V - E + F - 2 * comps;
}

void Web::validate() const {
  int H = numHalfEdges();
  if (static_cast<int>(twin.size()) != H) throw WebError("twin size mismatch");
  std::vector<int> count(H, 0);
  for (int v = 0; v < numVertices(); ++v) {
    if (!alive[v]) continue;
    for (int h : rot[v]) {
      if (h < 0 || h >= H || hv[h] != v) throw WebError("rotation lists a foreign half-edge");
      ++count[h];
    }
    int d = degree(v);
    if (kind[v] == VertexKind::Internal && d != 3) throw WebError("internal vertex not trivalent");
    if (kind[v] == VertexKind::Crossing && d != 4) throw WebError("crossing not 4-valent");
    if (kind[v] == VertexKind::Boundary && d < 1) throw WebError("boundary vertex without legs");
  }
  for (int h = 0; h < H; ++h) {
    if (!alive[hv[h]]) continue;
    if (count[h] != 1) throw WebError("half-edge not in exactly one rotation");
    int t = twin[h];
    if (t < 0 || t >= H || t == h || twin[t] != h || !alive[hv[t]])
      throw WebError("twin is not an involution");
  }
  std::vector<int> seenB(numVertices(), 0);
  for (int b : boundary) {
    if (b < 0 || b >= numVertices() || !alive[b] || kind[b] != VertexKind::Boundary)
      throw WebError("boundary list names a non-boundary vertex");
    if (seenB[b]++) throw WebError("boundary vertex listed twice");
  }
  for (int v = 0; v < numVertices(); ++v)
    if (alive[v] && kind[v] == VertexKind::Boundary && !seenB[v])
      throw WebError("boundary vertex missing from boundary order");
  for (int h = 0; h < H; ++h) {
    if (!alive[hv[h]] || isCrossing(hv[h])) continue;
    int e = strandEnd(h);
    if (e < 0) throw WebError("strand leaves a vertex and never returns");
    if (color[hv[e]] == color[hv[h]]) throw WebError("edge joins equal colors");
    if (isBoundary(hv[h]) && isBoundary(hv[e]) && hv[e] == hv[h])
      throw WebError("edge returns to its own boundary vertex");
  }
  if (eulerDefect(*this) != 0) throw WebError("rotation system is not planar in the disc");
}

Signature signatureOf(const Web& w) {
  Signature s;
  for (int b : w.boundary) s.letters.push_back(w.color[b]);
  return s;
}

std::vector<int> multiplicities(const Web& w) {
  std::vector<int> m;
  for (int b : w.boundary) m.push_back(w.degree(b));
  return m;
}

bool hasMultiEdge(const Web& w) {
  for (int v = 0; v < w.numVertices(); ++v) {
    if (!w.alive[v] || !w.isInternal(v)) continue;
    const auto& r = w.rot[v];
    for (size_t i = 0; i < r.size(); ++i)
      for (size_t j = i + 1; j < r.size(); ++j)
        if (w.other(r[i]) == w.other(r[j]) && !w.isCrossing(w.other(r[i]))) return true;
  }
  return false;
}

bool hasBoundaryY(const Web& w) {
  for (int v = 0; v < w.numVertices(); ++v) {
    if (!w.alive[v] || !w.isInternal(v)) continue;
    int n = 0;
    for (int h : w.rot[v])
      if (w.isBoundary(w.other(h))) ++n;
    if (n >= 2) return true;
  }
  return false;
}

bool hasClaspCollision(const Web& w) {
  for (int v = 0; v < w.numVertices(); ++v) {
    if (!w.alive[v] || !w.isInternal(v)) continue;
    int ends[3];
    for (int i = 0; i < 3; ++i) {
      int e = w.strandEnd(w.rot[v][i]);
      ends[i] = e < 0 ? -1 - i : w.hv[e];
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (ends[i] == ends[j] && ends[i] >= 0 && w.isBoundary(ends[i])) return true;
  }
  return false;
}

bool isNonElliptic(const Web& w) {
  if (w.loops > 0 || w.numCrossings() > 0) return false;
  int comps = 0;
  auto comp = componentOf(w, &comps);
  std::vector<uint8_t> touches(comps, 0);
  for (int b : w.boundary) touches[comp[b]] = 1;
  for (int c = 0; c < comps; ++c)
    if (!touches[c]) return false;
  if (hasMultiEdge(w)) return false;
  for (const auto& f : internalFaces(w))
    if (f.size() < 6) return false;
  return true;
}

namespace {

void putInt(std::string& s, int32_t x) {
  char buf[4];
  std::memcpy(buf, &x, 4);
  s.append(buf, 4);
}

// Deterministic traversal from the given roots; each root's rotation is read
// from the supplied starting half-edge.
std::string traverse(const Web& w, const std::vector<std::pair<int, int>>& roots,
                     bool ignoreOver, std::vector<int>& id, std::vector<int>& start) {
  std::vector<int> order;
  std::vector<int> queue;
  for (auto [v, s] : roots) {
    if (id[v] >= 0) continue;
    id[v] = static_cast<int>(order.size());
    start[v] = s;
    order.push_back(v);
  }
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    const auto& r = w.rot[v];
    int d = static_cast<int>(r.size());
    for (int k = 0; k < d; ++k) {
      int h = r[(start[v] + k) % d];
      int u = w.other(h);
      if (id[u] < 0) {
        id[u] = static_cast<int>(order.size());
        start[u] = w.rotIndex(w.twin[h]);
        order.push_back(u);
      }
    }
  }
  std::string key;
  key.reserve(order.size() * 24);
  for (int v : order) {
    const auto& r = w.rot[v];
    int d = static_cast<int>(r.size());
    int tag = 2;
    if (!ignoreOver && w.isCrossing(v) && w.over[v] >= 0) tag = (w.over[v] == start[v] % 2) ? 1 : 0;
    putInt(key, static_cast<int>(w.kind[v]) * 8 + static_cast<int>(w.color[v]) * 4 + tag);
    putInt(key, d);
    for (int k = 0; k < d; ++k) {
      int h = r[(start[v] + k) % d];
      int t = w.twin[h];
      int u = w.hv[t];
      int du = w.degree(u);
      int rel = ((w.rotIndex(t) - start[u]) % du + du) % du;
      putInt(key, id[u]);
      putInt(key, rel);
    }
  }
  return key;
}

}  // namespace

std::string canonicalKey(const Web& w, bool ignoreOver) {
  int n = w.numVertices();
  std::vector<int> id(n, -1), start(n, 0);
  std::vector<std::pair<int, int>> roots;
  for (int b : w.boundary) roots.emplace_back(b, 0);
  std::string key;
  putInt(key, w.numBoundary());
  putInt(key, w.loops);
  key += traverse(w, roots, ignoreOver, id, start);
  std::vector<std::string> closed;
  for (int v = 0; v < n; ++v) {
    if (!w.alive[v] || id[v] >= 0) continue;
    // closed component: minimize over every rooted start
    std::vector<int> members;
    {
      std::vector<int> tmpId(n, -1), tmpStart(n, 0);
      traverse(w, {{v, 0}}, true, tmpId, tmpStart);
      for (int u = 0; u < n; ++u)
        if (tmpId[u] >= 0) members.push_back(u);
    }
    std::string best;
    bool have = false;
    for (int u : members) {
      for (int s = 0; s < w.degree(u); ++s) {
        std::vector<int> tid(n, -1), tst(n, 0);
        std::string k = traverse(w, {{u, s}}, ignoreOver, tid, tst);
        if (!have || k < best) {
          best = std::move(k);
          have = true;
        }
      }
    }
    for (int u : members) id[u] = 0;
    closed.push_back(std::move(best));
  }
  std::sort(closed.begin(), closed.end());
  for (const auto& c : closed) {
    putInt(key, -1);
    putInt(key, static_cast<int>(c.size()));
    key += c;
  }
  return key;
}

Web rotateMarked(const Web& w, int steps) {
  Web r = w;
  int n = w.numBoundary();
  if (n == 0) return r;
  int s = ((steps % n) + n) % n;
  std::rotate(r.boundary.begin(), r.boundary.begin() + s, r.boundary.end());
  return r;
}

std::string rotationClassKey(const Web& w) {
  std::string best = canonicalKey(w);
  for (int s = 1; s < w.numBoundary(); ++s) best = std::min(best, canonicalKey(rotateMarked(w, s)));
  return best;
}

Web unclasp(const Web& w) {
  Web r = w;
  std::vector<int> nb;
  for (int b : w.boundary) {
    nb.push_back(b);
    auto legs = w.rot[b];
    if (legs.size() <= 1) continue;
    r.rot[b] = {legs[0]};
    for (size_t i = 1; i < legs.size(); ++i) {
      int u = r.addVertex(VertexKind::Boundary, w.color[b]);
      r.rot[u] = {legs[i]};
      r.hv[legs[i]] = u;
      nb.push_back(u);
    }
  }
  r.boundary = nb;
  return r.compacted();
}

Web clasp(const Web& w, const std::vector<int>& runs) {
  int total = std::accumulate(runs.begin(), runs.end(), 0);
  if (total != w.numBoundary()) throw WebError("clasp runs do not cover the boundary");
  Web r = w;
  std::vector<int> nb;
  int pos = 0;
  for (int len : runs) {
    if (len <= 0) throw WebError("clasp run must be positive");
    int first = w.boundary[pos];
    std::vector<int> legs;
    for (int i = 0; i < len; ++i) {
      int b = w.boundary[pos + i];
      if (w.color[b] != w.color[first]) throw WebError("clasp run mixes colors");
      if (w.degree(b) != 1) throw WebError("clasp run contains a clasped vertex");
      legs.push_back(w.rot[b][0]);
      if (i > 0) r.kill(b);
    }
    for (int h : legs) r.hv[h] = first;
    r.rot[first] = legs;
    nb.push_back(first);
    pos += len;
  }
  r.boundary = nb;
  Web c = r.compacted();
  for (int v = 0; v < c.numVertices(); ++v) {
    if (!c.isInternal(v)) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (c.other(c.rot[v][i]) == c.other(c.rot[v][j]) && c.isBoundary(c.other(c.rot[v][i])))
          return c;  // vanishing web; callers detect via hasClaspCollision
  }
  return c;
}

Web emptyWeb() { return Web{}; }

Web disjointUnion(const Web& a, const Web& b) {
  Web r = a;
  int off = a.numVertices();
  int hoff = a.numHalfEdges();
  for (int v = 0; v < b.numVertices(); ++v) {
    r.addVertex(b.kind[v], b.color[v]);
    r.over.back() = b.over[v];
    r.alive.back() = b.alive[v];
  }
  for (int h = 0; h < b.numHalfEdges(); ++h) {
    r.hv.push_back(b.hv[h] + off);
    r.twin.push_back(b.twin[h] + hoff);
  }
  for (int v = 0; v < b.numVertices(); ++v)
    for (int h : b.rot[v]) r.rot[v + off].push_back(h + hoff);
  for (int x : b.boundary) r.boundary.push_back(x + off);
  r.loops += b.loops;
  return r;
}

int rewire(Web& w, const std::vector<int>& removed, const std::vector<int>& ports,
           const Fragment& frag) {
  for (int v : removed) w.kill(v);
  int np = static_cast<int>(ports.size());
  std::unordered_map<int, int> portIndex;
  for (int i = 0; i < np; ++i) portIndex[ports[i]] = i;
  // attachment of the inner side of each port: >= 0 new half-edge, or -(2 + q) for port q
  std::vector<int> attach(np, -1);
  std::vector<int> newV;
  for (size_t j = 0; j < frag.colors.size(); ++j)
    newV.push_back(w.addVertex(VertexKind::Internal, frag.colors[j]));
  std::vector<std::vector<int>> slotHe(frag.colors.size());
  for (size_t j = 0; j < frag.colors.size(); ++j) {
    for (int s : frag.slots[j]) {
      int h = w.newHalfEdge(newV[j]);
      slotHe[j].push_back(h);
      if (s >= 0) attach[s] = h;
    }
  }
  for (size_t j = 0; j < frag.colors.size(); ++j) {
    for (size_t k = 0; k < frag.slots[j].size(); ++k) {
      int s = frag.slots[j][k];
      if (s >= 0) continue;
      int other = -1 - s;
      if (static_cast<int>(j) > other) continue;
      // pair the k-th occurrence deterministically with the matching slot
      int occ = 0;
      for (size_t kk = 0; kk < k; ++kk)
        if (frag.slots[j][kk] == s) ++occ;
      int seen = 0;
      for (size_t m = 0; m < frag.slots[other].size(); ++m) {
        if (frag.slots[other][m] == -1 - static_cast<int>(j)) {
          if (seen == occ) {
            if (other == static_cast<int>(j) && m == k) continue;
            w.link(slotHe[j][k], slotHe[other][m]);
            break;
          }
          ++seen;
        }
      }
    }
  }
  for (auto [p, q] : frag.pairs) {
    attach[p] = -(2 + q);
    attach[q] = -(2 + p);
  }
  std::vector<uint8_t> used(np, 0);
  auto outerAlive = [&](int p) { return w.alive[w.hv[w.twin[ports[p]]]] != 0; };
  // walk from inner side of port p to the far endpoint
  auto walkFrom = [&](int p) -> int {
    int cur = p;
    for (int guard = 0; guard <= 2 * np + 2; ++guard) {
      used[cur] = 1;
      if (outerAlive(cur)) return w.twin[ports[cur]];
      auto it = portIndex.find(w.twin[ports[cur]]);
      if (it == portIndex.end()) throw WebError("rewire: region leaks through a non-port edge");
      int r = it->second;
      used[r] = 1;
      int a = attach[r];
      if (a >= 0) return a;
      if (a == -1) throw WebError("rewire: unattached port");
      cur = -(a + 2);
    }
    throw WebError("rewire: cycle while resolving ports");
  };
  std::vector<std::pair<int, int>> links;
  for (int p = 0; p < np; ++p) {
    int a = attach[p];
    if (a >= 0) {
      int far = walkFrom(p);
      links.emplace_back(a, far);
    } else if (a <= -2 && outerAlive(p)) {
      int q = -(a + 2);
      used[p] = 1;
      int far = walkFrom(q);
      links.emplace_back(w.twin[ports[p]], far);
    }
  }
  for (auto [a, b] : links) w.link(a, b);
  int loopsMade = 0;
  for (int p = 0; p < np; ++p) {
    if (used[p]) continue;
    int cur = p;
    while (!used[cur]) {
      used[cur] = 1;
      auto it = portIndex.find(w.twin[ports[cur]]);
      if (it == portIndex.end()) throw WebError("rewire: dangling closed chain");
      int r = it->second;
      used[r] = 1;
      int a = attach[r];
      if (a > -2) throw WebError("rewire: inconsistent closed chain");
      cur = -(a + 2);
    }
    ++loopsMade;
  }
  w.loops += loopsMade;
  return loopsMade;
}

void WebCombo::add(const std::string& key, const Web& w, const LaurentPoly& c) {
  if (c.isZero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    webs.emplace(key, w);
    return;
  }
  it->second += c;
  if (it->second.isZero()) {
    terms.erase(it);
    webs.erase(key);
  }
}

void WebCombo::add(const Web& w, const LaurentPoly& c) { add(canonicalKey(w), w, c); }

WebCombo& WebCombo::operator+=(const WebCombo& o) {
  for (const auto& [k, c] : o.terms) add(k, o.webs.at(k), c);
  return *this;
}

WebCombo WebCombo::scaled(const LaurentPoly& c) const {
  WebCombo r;
  if (c.isZero()) return r;
  for (const auto& [k, t] : terms) {
    r.terms.emplace(k, t * c);
    r.webs.emplace(k, webs.at(k));
  }
  return r;
}

}  // namespace sl3web
