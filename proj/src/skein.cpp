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

#include "sl3web/skein.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sl3web/classical.hpp"

namespace sl3web {

namespace {

uint64_t nextRandom(uint64_t* s) {
  uint64_t z = (*s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class T>
void shuffleWith(std::vector<T>& xs, uint64_t* rng) {
  if (!rng) return;
  for (size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[nextRandom(rng) % i]);
}

LaurentPoly power(const LaurentPoly& x, int n) {
  LaurentPoly r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

Web finish(Web w) { return w.compacted(); }

Web subWeb(const Web& d, const std::vector<int>& comp, int keep) {
  Web s = d;
  s.loops = 0;
  for (int v = 0; v < s.numVertices(); ++v)
    if (s.alive[v] && comp[v] != keep) s.kill(v);
  s.boundary.clear();
  return s.compacted();
}

int third(const Web& d, int h) { return d.rotNext(h, 1); }

struct Rewrite {
  std::vector<int> removed, ports;
  Fragment frag;
  LaurentPoly coeff;
};

Web apply(const Web& d, const Rewrite& r) {
  Web w = d;
  rewire(w, r.removed, r.ports, r.frag);
  return finish(std::move(w));
}

Fragment pairsOnly(std::vector<std::pair<int, int>> p) {
  Fragment f;
  f.pairs = std::move(p);
  return f;
}

std::vector<Rewrite> squareRewrites(const Web& d, const std::vector<int>& f,
                                    const SkeinCoefficients& k) {
  std::vector<int> ports;
  std::vector<int> verts;
  for (int h : f) {
    verts.push_back(d.hv[h]);
    ports.push_back(third(d, h));
  }
  std::vector<Rewrite> out(2);
  out[0] = {verts, ports, pairsOnly({{0, 1}, {2, 3}}), k.squareA};
  out[1] = {verts, ports, pairsOnly({{1, 2}, {3, 0}}), k.squareB};
  return out;
}

bool isSquare(const Web& d, const std::vector<int>& f) {
  if (f.size() != 4) return false;
  std::set<int> vs;
  for (int h : f) {
    if (!d.isInternal(d.hv[h])) return false;
    vs.insert(d.hv[h]);
  }
  return vs.size() == 4;
}

bool isBigon(const Web& d, const std::vector<int>& f) {
  return f.size() == 2 && d.isInternal(d.hv[f[0]]) && d.isInternal(d.hv[f[1]]) &&
         d.hv[f[0]] != d.hv[f[1]];
}

Color portColor(const Web& d, int h) {
  int e = d.strandEnd(h);
  if (e < 0) throw WebError("closed strand through a crossing in quantum mode");
  return d.color[d.hv[e]];
}

std::vector<Rewrite> crossingRewrites(const Web& d, int c, const SkeinCoefficients& k) {
  const auto& r = d.rot[c];
  Color pc[4];
  for (int j = 0; j < 4; ++j) pc[j] = portColor(d, r[j]);
  int i = pc[0] == pc[1] ? 0 : 1;
  int t = crossingSign(d, c) > 0 ? 0 : 1;
  std::vector<int> ports(r.begin(), r.end());
  Rewrite smooth{{c}, ports, pairsOnly({{(i + 1) % 4, (i + 2) % 4}, {(i + 3) % 4, i}}), k.smooth[t]};
  Fragment h;
  Color xc = opposite(pc[i]);
  h.colors = {xc, opposite(xc)};
  h.slots = {{i, (i + 1) % 4, -2}, {-1, (i + 2) % 4, (i + 3) % 4}};
  Rewrite hw{{c}, ports, h, k.hweb[t]};
  return {smooth, hw};
}

}  // namespace

int crossingSign(const Web& d, int c) {
  int out[2], dummy = 0;
  for (int s = 0; s < 2; ++s) {
    int a = s, b = s + 2;
    Color ca = d.strandColor(d.rot[c][a]);
    if (d.strandEnd(d.rot[c][a]) < 0) ++dummy;
    out[s] = ca == Color::Black ? a : b;
  }
  int po = out[d.over[c] & 1], pu = out[1 - (d.over[c] & 1)];
  int diff = ((pu - po) % 4 + 4) % 4;
  return diff == 3 ? 1 : -1;
}

SkeinCoefficients SkeinCoefficients::forMode(SkeinMode m) {
  SkeinCoefficients k;
  if (m == SkeinMode::Commutative) {
    k.loop = LaurentPoly(3);
    k.bigon = LaurentPoly(-2);
    k.squareA = k.squareB = LaurentPoly(1);
    for (int t = 0; t < 2; ++t) {
      k.smooth[t] = LaurentPoly(1);
      k.hweb[t] = LaurentPoly(1);
    }
    return k;
  }
  k.loop = quantumInt(3);
  k.bigon = -quantumInt(2);
  k.squareA = k.squareB = LaurentPoly(1);
  k.smooth[0] = k.smooth[1] = LaurentPoly(1);
  k.hweb[0] = -LaurentPoly::monomial(1, 1);
  k.hweb[1] = -LaurentPoly::monomial(-1, 1);
  return k;
}

WeightedDiagram removeLoop(const Web& d, SkeinMode mode) {
  auto k = SkeinCoefficients::forMode(mode);
  Web w = d;
  LaurentPoly c = power(k.loop, w.loops);
  w.loops = 0;
  return {w, c};
}

WeightedDiagram removeBigon(const Web& d, SkeinMode mode) {
  auto k = SkeinCoefficients::forMode(mode);
  for (const auto& f : internalFaces(d)) {
    if (!isBigon(d, f)) continue;
    Rewrite r{{d.hv[f[0]], d.hv[f[1]]}, {third(d, f[0]), third(d, f[1])}, pairsOnly({{0, 1}}), k.bigon};
    return {apply(d, r), r.coeff};
  }
  throw WebError("no bigon face");
}

std::vector<WeightedDiagram> resolveSquare(const Web& d, SkeinMode mode) {
  auto k = SkeinCoefficients::forMode(mode);
  for (const auto& f : internalFaces(d)) {
    if (!isSquare(d, f)) continue;
    std::vector<WeightedDiagram> out;
    for (const auto& r : squareRewrites(d, f, k)) out.push_back({apply(d, r), r.coeff});
    return out;
  }
  throw WebError("no square face");
}

std::vector<WeightedDiagram> resolveCrossing(const Web& d, SkeinMode mode) {
  auto k = SkeinCoefficients::forMode(mode);
  for (int c = 0; c < d.numVertices(); ++c) {
    if (!d.alive[c] || !d.isCrossing(c)) continue;
    std::vector<WeightedDiagram> out;
    for (const auto& r : crossingRewrites(d, c, k)) out.push_back({apply(d, r), r.coeff});
    return out;
  }
  throw WebError("no crossing");
}

SkeinEngine::SkeinEngine(SkeinMode mode) : mode_(mode), k_(SkeinCoefficients::forMode(mode)) {}

size_t SkeinEngine::memoSize() const {
  std::lock_guard<std::mutex> g(mu_);
  return memo_.size();
}

LaurentPoly SkeinEngine::closedValue(const Web& d) {
  if (mode_ == SkeinMode::Commutative) return LaurentPoly(evalNumeric(d, Configuration{}));
  WebCombo r = reduce(d);
  if (r.isZero()) return LaurentPoly();
  if (r.size() != 1) throw WebError("closed component did not reduce to a scalar");
  const Web& w = r.webs.begin()->second;
  if (w.numVertices() != 0) throw WebError("closed component did not reduce to a scalar");
  return r.terms.begin()->second;
}

bool SkeinEngine::simplify(Web& d, LaurentPoly& coeff, uint64_t* rng) {
  bool commutative = mode_ == SkeinMode::Commutative;
  for (;;) {
    if (coeff.isZero()) return false;
    if (commutative && hasClaspCollision(d)) return false;
    if (d.loops > 0) {
      coeff *= power(k_.loop, d.loops);
      d.loops = 0;
    }
    if (commutative) {
      bool removed = false;
      for (int c = 0; c < d.numVertices() && !removed; ++c) {
        if (!d.alive[c] || !d.isCrossing(c)) continue;
        for (int s = 0; s < 2 && !removed; ++s) {
          if (d.strandEnd(d.rot[c][s]) >= 0) continue;
          // closed strand: lift it off every crossing it meets
          std::vector<int> onStrand;
          std::set<int> seen;
          int cur = d.rot[c][s];
          do {
            int v = d.hv[cur];
            if (seen.insert(v).second) onStrand.push_back(v);
            cur = d.rotNext(d.twin[cur], 2);
          } while (cur != d.rot[c][s]);
          std::set<int> strandHe;
          cur = d.rot[c][s];
          do {
            strandHe.insert(cur);
            strandHe.insert(d.twin[cur]);
            cur = d.rotNext(d.twin[cur], 2);
          } while (cur != d.rot[c][s]);
          Rewrite r;
          r.removed = onStrand;
          for (int v : onStrand) {
            for (int j = 0; j < 2; ++j) {
              int a = d.rot[v][j], b = d.rot[v][j + 2];
              if (strandHe.count(a)) continue;
              int p = static_cast<int>(r.ports.size());
              r.ports.push_back(a);
              r.ports.push_back(b);
              r.frag.pairs.emplace_back(p, p + 1);
            }
          }
          d = apply(d, r);
          d.loops += 1;
          removed = true;
        }
      }
      if (removed) continue;
    }
    int comps = 0;
    auto comp = componentOf(d, &comps);
    if (comps > 1 || (commutative && comps == 1 && d.numBoundary() == 0 && d.numVertices() > 0)) {
      std::vector<uint8_t> touches(comps, 0);
      for (int b : d.boundary) touches[comp[b]] = 1;
      bool extracted = false;
      for (int ci = 0; ci < comps; ++ci) {
        if (touches[ci]) continue;
        if (!commutative && comps == 1) break;
        Web sub = subWeb(d, comp, ci);
        coeff *= closedValue(sub);
        for (int v = 0; v < d.numVertices(); ++v)
          if (d.alive[v] && comp[v] == ci) d.kill(v);
        extracted = true;
        if (coeff.isZero()) return false;
      }
      if (extracted) {
        d = d.compacted();
        continue;
      }
    }
    auto faces = internalFaces(d);
    std::vector<size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    shuffleWith(order, rng);
    bool changed = false;
    for (size_t oi : order) {
      const auto& f = faces[oi];
      if (f.size() > 2) continue;
      if (f.size() == 1) {
        if (!commutative) continue;
        int c = d.hv[f[0]];
        if (!d.isCrossing(c)) continue;
        std::vector<int> ports;
        for (int h : d.rot[c])
          if (h != f[0] && h != d.twin[f[0]]) ports.push_back(h);
        if (trace_) trace_("kink");
        d = apply(d, {{c}, ports, pairsOnly({{0, 1}}), LaurentPoly(1)});
        changed = true;
        break;
      }
      int a = d.hv[f[0]], b = d.hv[f[1]];
      if (a == b) continue;
      if (isBigon(d, f)) {
        if (trace_) trace_("bigon");
        d = apply(d, {{a, b}, {third(d, f[0]), third(d, f[1])}, pairsOnly({{0, 1}}), k_.bigon});
        coeff *= k_.bigon;
        changed = true;
        break;
      }
      if (d.isCrossing(a) && d.isCrossing(b)) {
        int h0 = f[0], h1 = f[1];
        if (!commutative) {
          bool overA1 = (d.over[a] & 1) == d.rotIndex(h0) % 2;
          bool overA2 = (d.over[b] & 1) == d.rotIndex(d.twin[h0]) % 2;
          if (overA1 != overA2) continue;
        }
        std::vector<int> ports = {d.rotNext(h0, 2), d.rotNext(d.twin[h0], 2),
                                  d.rotNext(d.twin[h1], 2), d.rotNext(h1, 2)};
        if (trace_) trace_("r2");
        d = apply(d, {{a, b}, ports, pairsOnly({{0, 1}, {2, 3}}), LaurentPoly(1)});
        changed = true;
        break;
      }
      if (commutative && (d.isInternal(a) != d.isInternal(b)) &&
          (d.isCrossing(a) || d.isCrossing(b))) {
        int g0 = d.isInternal(a) ? f[0] : f[1];
        int g1 = d.isInternal(a) ? f[1] : f[0];
        int u = d.hv[g0], c = d.hv[g1];
        int tu = d.rotNext(g0, 1);
        int k0 = d.rotIndex(d.twin[g0]);
        std::vector<int> ports = {tu, d.rot[c][(k0 + 2) % 4], d.rot[c][(k0 + 3) % 4]};
        Fragment fr;
        fr.colors = {d.color[u]};
        fr.slots = {{0, 1, 2}};
        if (trace_) trace_("vertex-crossing");
        d = apply(d, {{u, c}, ports, fr, LaurentPoly(-1)});
        coeff = -coeff;
        changed = true;
        break;
      }
    }
    if (!changed) return true;
  }
}

WebCombo SkeinEngine::reduce(const Web& d0, uint64_t strategySeed) {
  Web d = d0.compacted();
  LaurentPoly c(1);
  uint64_t state = strategySeed;
  uint64_t* rng = strategySeed ? &state : nullptr;
  if (!simplify(d, c, rng)) return {};
  return reduceNormalized(d, rng, 0).scaled(c);
}

WebCombo SkeinEngine::reduceNormalized(const Web& d, uint64_t* rng, int depth) {
  bool commutative = mode_ == SkeinMode::Commutative;
  std::string key = canonicalKey(d, commutative);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++steps_ > stepLimit_) throw WebError("skein reduction exceeded its step limit");
  }
  std::vector<Rewrite> cands;
  std::vector<int> candStart;
  auto faces = internalFaces(d);
  for (const auto& f : faces) {
    if (!isSquare(d, f)) continue;
    candStart.push_back(static_cast<int>(cands.size()));
    for (auto& r : squareRewrites(d, f, k_)) cands.push_back(std::move(r));
  }
  for (int c = 0; c < d.numVertices(); ++c) {
    if (!d.alive[c] || !d.isCrossing(c)) continue;
    candStart.push_back(static_cast<int>(cands.size()));
    for (auto& r : crossingRewrites(d, c, k_)) cands.push_back(std::move(r));
  }
  WebCombo result;
  if (candStart.empty()) {
    for (const auto& f : faces)
      if (f.size() < 6) throw WebError("skein reduction is stuck on a small face");
    result.add(canonicalKey(d, commutative), d, LaurentPoly(1));
  } else {
    int n = static_cast<int>(candStart.size());
    auto childrenOf = [&](int ci) {
      std::vector<std::pair<Web, LaurentPoly>> kids;
      for (int j = candStart[ci]; j < candStart[ci] + 2; ++j) {
        Web w = apply(d, cands[j]);
        LaurentPoly c = cands[j].coeff;
        if (simplify(w, c, rng)) kids.emplace_back(std::move(w), std::move(c));
      }
      return kids;
    };
    std::vector<std::pair<Web, LaurentPoly>> best;
    if (rng) {
      best = childrenOf(static_cast<int>(nextRandom(rng) % n));
    } else {
      size_t bestScore = SIZE_MAX;
      for (int ci = 0; ci < n; ++ci) {
        auto kids = childrenOf(ci);
        size_t score = kids.size();
        if (score < bestScore) {
          bestScore = score;
          best = std::move(kids);
          if (score == 0) break;
        }
      }
    }
    if (trace_) trace_("branch " + std::to_string(best.size()));
    for (auto& [w, c] : best) result += reduceNormalized(w, rng, depth + 1).scaled(c);
  }
  std::lock_guard<std::mutex> g(mu_);
  memo_.emplace(key, result);
  return result;
}

WebCombo reduceToBasis(const Web& d, SkeinMode mode) {
  SkeinEngine e(mode);
  return e.reduce(d);
}

}  // namespace sl3web
