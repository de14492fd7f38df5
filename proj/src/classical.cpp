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

#include "sl3web/classical.hpp"

#include <algorithm>
#include <unordered_map>

namespace sl3web {

namespace {

int permSign(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // even permutations of (0,1,2) are its cyclic rotations
  if ((a + 1) % 3 == b && (b + 1) % 3 == c) return 1;
  return -1;
}

}  // namespace

mpq_class evalNumeric(const Web& d, const Configuration& cfg) {
  int V = d.numVertices();
  // abstract edges between non-crossing vertices
  std::vector<int> edgeOf(d.numHalfEdges(), -1);
  std::vector<std::pair<int, int>> edgeEnds;
  int closedStrands = 0;
  for (int h = 0; h < d.numHalfEdges(); ++h) {
    if (!d.alive[d.hv[h]] || d.isCrossing(d.hv[h]) || edgeOf[h] >= 0) continue;
    int e = d.strandEnd(h);
    if (e < 0) throw WebError("strand without an end");
    int id = static_cast<int>(edgeEnds.size());
    edgeOf[h] = edgeOf[e] = id;
    edgeEnds.emplace_back(d.hv[h], d.hv[e]);
  }
  {
    std::vector<uint8_t> seen(d.numHalfEdges(), 0);
    for (int h = 0; h < d.numHalfEdges(); ++h) {
      if (!d.alive[d.hv[h]] || !d.isCrossing(d.hv[h]) || seen[h]) continue;
      // walk the strand; closed if it never reaches a non-crossing vertex
      int cur = h;
      bool closed = true;
      for (int guard = 0; guard < d.numHalfEdges() + 2; ++guard) {
        seen[cur] = 1;
        int t = d.twin[cur];
        seen[t] = 1;
        if (!d.isCrossing(d.hv[t])) {
          closed = false;
          break;
        }
        cur = d.rotNext(t, 2);
        if (cur == h) break;
      }
      if (closed) {
        // mark the whole strand from the other direction as well
        int c2 = d.rotNext(h, 2);
        for (int guard = 0; guard < d.numHalfEdges() + 2 && !seen[c2]; ++guard) {
          seen[c2] = 1;
          int t = d.twin[c2];
          seen[t] = 1;
          c2 = d.rotNext(t, 2);
        }
        ++closedStrands;
      }
    }
  }
  std::vector<int> whiteIdx(V, -1), blackIdx(V, -1);
  int nw = 0, nb = 0;
  for (int b : d.boundary) (d.color[b] == Color::White ? whiteIdx[b] = nw++ : blackIdx[b] = nb++);
  if (nw != static_cast<int>(cfg.covectors.size()) || nb != static_cast<int>(cfg.vectors.size()))
    throw WebError("configuration arity does not match the diagram type");
  std::vector<int> verts;
  for (int v = 0; v < V; ++v)
    if (d.alive[v] && !d.isCrossing(v)) verts.push_back(v);
  std::vector<std::vector<int>> inc(V);
  for (int v : verts)
    for (int h : d.rot[v]) inc[v].push_back(edgeOf[h]);
  int E = static_cast<int>(edgeEnds.size());
  std::vector<int> remaining(E, 2);
  std::vector<uint8_t> done(V, 0);
  std::vector<int> frontier;  // edge ids
  std::unordered_map<uint64_t, mpq_class> table;
  table.emplace(0, mpq_class(1));
  std::vector<int> posIn(E, -1);
  uint64_t pow3[41];
  pow3[0] = 1;
  for (int i = 1; i <= 40; ++i) pow3[i] = pow3[i - 1] * 3;
  for (size_t step = 0; step < verts.size(); ++step) {
    int best = -1, bestSize = 1 << 30, bestClosed = -1;
    for (int v : verts) {
      if (done[v]) continue;
      int closing = 0, opening = 0;
      std::vector<int> seenE;
      for (int e : inc[v]) {
        if (std::find(seenE.begin(), seenE.end(), e) != seenE.end()) continue;
        seenE.push_back(e);
        int cnt = static_cast<int>(std::count(inc[v].begin(), inc[v].end(), e));
        if (posIn[e] >= 0 || cnt == remaining[e]) ++closing;
        else ++opening;
      }
      int size = static_cast<int>(frontier.size()) + opening - (closing - 0);
      if (size < bestSize || (size == bestSize && closing > bestClosed)) {
        best = v;
        bestSize = size;
        bestClosed = closing;
      }
    }
    int v = best;
    done[v] = 1;
    std::vector<int> fresh;
    for (int e : inc[v])
      if (posIn[e] < 0 && std::find(fresh.begin(), fresh.end(), e) == fresh.end()) fresh.push_back(e);
    std::vector<int> newFrontier;
    for (int e : frontier) {
      int cnt = static_cast<int>(std::count(inc[v].begin(), inc[v].end(), e));
      if (remaining[e] - cnt > 0) newFrontier.push_back(e);
    }
    for (int e : fresh) {
      int cnt = static_cast<int>(std::count(inc[v].begin(), inc[v].end(), e));
      if (remaining[e] - cnt > 0) newFrontier.push_back(e);
    }
    if (newFrontier.size() > 40) throw WebError("classical evaluation frontier too wide");
    std::vector<int> newPos(E, -1);
    for (size_t i = 0; i < newFrontier.size(); ++i) newPos[newFrontier[i]] = static_cast<int>(i);
    std::unordered_map<uint64_t, mpq_class> next;
    int nf = static_cast<int>(fresh.size());
    std::vector<int> lab(E, 0);
    for (const auto& [code, val] : table) {
      for (size_t i = 0; i < frontier.size(); ++i) lab[frontier[i]] = static_cast<int>((code / pow3[i]) % 3);
      for (uint64_t a = 0; a < pow3[nf]; ++a) {
        for (int i = 0; i < nf; ++i) lab[fresh[i]] = static_cast<int>((a / pow3[i]) % 3);
        mpq_class f;
        if (d.isInternal(v)) {
          int s = permSign(lab[inc[v][0]], lab[inc[v][1]], lab[inc[v][2]]);
          if (s == 0) continue;
          f = s;
        } else {
          const Vec3& x = d.color[v] == Color::White ? cfg.covectors[whiteIdx[v]] : cfg.vectors[blackIdx[v]];
          f = 1;
          for (int e : inc[v]) f *= x[lab[e]];
          if (sgn(f) == 0) continue;
        }
        uint64_t nc = 0;
        for (size_t i = 0; i < newFrontier.size(); ++i) nc += pow3[i] * lab[newFrontier[i]];
        mpq_class add = val * f;
        auto [it, ins] = next.try_emplace(nc, add);
        if (!ins) it->second += add;
      }
    }
    for (int e : inc[v]) --remaining[e];
    for (int e : frontier) posIn[e] = -1;
    frontier = newFrontier;
    for (size_t i = 0; i < frontier.size(); ++i) posIn[frontier[i]] = static_cast<int>(i);
    table = std::move(next);
  }
  mpq_class total = 0;
  for (const auto& [code, val] : table) total += val;
  int loops = d.loops + closedStrands;
  for (int i = 0; i < loops; ++i) total *= 3;
  return total;
}

mpq_class evalComboNumeric(const WebCombo& wc, const Configuration& c) {
  mpq_class s = 0;
  for (const auto& [k, coef] : wc.terms) s += coef.classicalLimit() * evalNumeric(wc.webs.at(k), c);
  return s;
}

Configuration randomConfiguration(const Web& d, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  Configuration c;
  for (int b : d.boundary) {
    Vec3 x{mpq_class(dist(rng)), mpq_class(dist(rng)), mpq_class(dist(rng))};
    (d.color[b] == Color::White ? c.covectors : c.vectors).push_back(x);
  }
  return c;
}

Mat3 randomUnimodular(std::mt19937_64& rng) {
  Mat3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = (i == j) ? 1 : 0;
  std::uniform_int_distribution<int> pick(0, 2), val(-3, 3);
  for (int step = 0; step < 6; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    mpq_class t = val(rng);
    for (int k = 0; k < 3; ++k) g[i][k] += t * g[j][k];
  }
  return g;
}

Configuration actOn(const Configuration& c, const Mat3& g) {
  // inverse of a unimodular matrix via the adjugate
  Mat3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int a = (j + 1) % 3, b = (j + 2) % 3, p = (i + 1) % 3, q = (i + 2) % 3;
      inv[i][j] = g[a][p] * g[b][q] - g[a][q] * g[b][p];
    }
  mpq_class det = g[0][0] * inv[0][0] + g[0][1] * inv[1][0] + g[0][2] * inv[2][0];
  for (auto& row : inv)
    for (auto& x : row) x /= det;
  Configuration r;
  for (const Vec3& y : c.vectors) {
    Vec3 z;
    for (int i = 0; i < 3; ++i) z[i] = g[i][0] * y[0] + g[i][1] * y[1] + g[i][2] * y[2];
    r.vectors.push_back(z);
  }
  for (const Vec3& x : c.covectors) {
    Vec3 z;
    for (int j = 0; j < 3; ++j) z[j] = x[0] * inv[0][j] + x[1] * inv[1][j] + x[2] * inv[2][j];
    r.covectors.push_back(z);
  }
  return r;
}

}  // namespace sl3web
