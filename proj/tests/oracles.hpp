// Independent reference implementations used only by the tests.

#ifndef SL3WEB_TESTS_ORACLES_HPP_
#define SL3WEB_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "sl3web/classical.hpp"
#include "sl3web/web.hpp"

namespace oracle {

using sl3web::Color;
using sl3web::Web;

// Plain backtracking over edge labels, one vertex at a time.
inline mpq_class bruteEval(const Web& d, const sl3web::Configuration& cfg) {
  int H = d.numHalfEdges();
  std::vector<int> edge(H, -1);
  int E = 0, closed = 0;
  for (int h = 0; h < H; ++h) {
    if (!d.alive[d.hv[h]] || d.isCrossing(d.hv[h]) || edge[h] >= 0) continue;
    int cur = h;
    for (;;) {
      int t = d.twin[cur];
      if (!d.isCrossing(d.hv[t])) {
        edge[h] = edge[t] = E++;
        break;
      }
      int k = 0;
      while (d.rot[d.hv[t]][k] != t) ++k;
      cur = d.rot[d.hv[t]][(k + 2) % 4];
    }
  }
  std::vector<char> seen(H, 0);
  for (int h = 0; h < H; ++h) {
    if (!d.alive[d.hv[h]] || !d.isCrossing(d.hv[h]) || seen[h]) continue;
    // follow both directions; closed if no end is met
    bool open = false;
    for (int start : {h, -1}) {
      int cur = start;
      if (cur < 0) {
        int k = 0;
        while (d.rot[d.hv[h]][k] != h) ++k;
        cur = d.rot[d.hv[h]][(k + 2) % 4];
      }
      for (int g = 0; g <= H; ++g) {
        seen[cur] = 1;
        int t = d.twin[cur];
        seen[t] = 1;
        if (!d.isCrossing(d.hv[t])) {
          open = true;
          break;
        }
        int k = 0;
        while (d.rot[d.hv[t]][k] != t) ++k;
        cur = d.rot[d.hv[t]][(k + 2) % 4];
        if (seen[cur]) break;
      }
    }
    if (!open) ++closed;
  }
  std::vector<int> verts;
  for (int v = 0; v < d.numVertices(); ++v)
    if (d.alive[v] && !d.isCrossing(v)) verts.push_back(v);
  std::vector<int> wi(d.numVertices(), -1), bi(d.numVertices(), -1);
  int nw = 0, nb = 0;
  for (int b : d.boundary) (d.color[b] == Color::White ? wi[b] = nw++ : bi[b] = nb++);
  std::vector<int> lab(E, -1);
  std::function<mpq_class(size_t)> rec = [&](size_t i) -> mpq_class {
    if (i == verts.size()) return 1;
    int v = verts[i];
    std::vector<int> fresh;
    for (int h : d.rot[v])
      if (lab[edge[h]] < 0 && std::find(fresh.begin(), fresh.end(), edge[h]) == fresh.end())
        fresh.push_back(edge[h]);
    mpq_class total = 0;
    int combos = 1;
    for (size_t k = 0; k < fresh.size(); ++k) combos *= 3;
    for (int a = 0; a < combos; ++a) {
      int x = a;
      for (int e : fresh) {
        lab[e] = x % 3;
        x /= 3;
      }
      mpq_class f = 1;
      if (d.isInternal(v)) {
        int l0 = lab[edge[d.rot[v][0]]], l1 = lab[edge[d.rot[v][1]]], l2 = lab[edge[d.rot[v][2]]];
        if (l0 == l1 || l1 == l2 || l0 == l2) f = 0;
        else f = ((l0 + 1) % 3 == l1) ? 1 : -1;
      } else {
        const auto& vec = d.color[v] == Color::White ? cfg.covectors[wi[v]] : cfg.vectors[bi[v]];
        for (int h : d.rot[v]) f *= vec[lab[edge[h]]];
      }
      if (sgn(f) != 0) total += f * rec(i + 1);
    }
    for (int e : fresh) lab[e] = -1;
    return total;
  };
  mpq_class r = rec(0);
  for (int i = 0; i < d.loops + closed; ++i) r *= 3;
  return r;
}

// Multiplicity of the trivial representation from the full character:
// alternating sum of weight multiplicities over the Weyl group.
inline uint64_t characterOracle(const sl3web::Signature& s) {
  std::map<std::pair<int, int>, int64_t> m;
  m[{0, 0}] = 1;
  for (Color c : s.letters) {
    std::array<std::pair<int, int>, 3> wts;
    if (c == Color::White) {
      wts = {{{1, 0}, {-1, 1}, {0, -1}}};
    } else {
      wts = {{{0, 1}, {1, -1}, {-1, 0}}};
    }
    std::map<std::pair<int, int>, int64_t> n;
    for (const auto& [w, k] : m)
      for (auto [a, b] : wts) n[{w.first + a, w.second + b}] += k;
    m = std::move(n);
  }
  // w(rho) - rho in fundamental-weight coordinates, with signs.
  const std::array<std::pair<std::pair<int, int>, int>, 6> shifts = {{
      {{0, 0}, 1}, {{-2, 1}, -1}, {{1, -2}, -1}, {{-3, 0}, 1}, {{0, -3}, 1}, {{-2, -2}, -1}}};
  int64_t total = 0;
  for (auto [mu, sign] : shifts) {
    auto it = m.find(mu);
    if (it != m.end()) total += sign * it->second;
  }
  return static_cast<uint64_t>(total);
}

}  // namespace oracle

#endif  // SL3WEB_TESTS_ORACLES_HPP_
