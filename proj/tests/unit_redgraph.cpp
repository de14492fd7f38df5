#include <set>

#include "doctest.h"
#include "sl3web/corpus.hpp"
#include "sl3web/redgraph.hpp"
#include "sl3web/skein.hpp"

using namespace sl3web;

namespace {

// Subsets of internal faces with no vertex in three chosen faces, counted
// directly from the face boundaries.
size_t bruteForceRedGraphCount(const Web& w) {
  auto faces = internalFaces(w);
  size_t F = faces.size();
  size_t count = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << F); ++mask) {
    std::vector<int> hits(w.numVertices(), 0);
    bool ok = true;
    for (size_t f = 0; f < F && ok; ++f) {
      if (!(mask >> f & 1)) continue;
      std::set<int> vs;
      for (int h : faces[f]) vs.insert(w.hv[h]);
      for (int v : vs) ok &= ++hits[v] < 3;
    }
    count += ok;
  }
  return count;
}

bool bruteForceAdmissible(const RedGraph& g) {
  size_t E = g.edges.size();
  for (uint64_t o = 0; o < (uint64_t{1} << E); ++o) {
    std::vector<int> indeg(g.faces.size(), 0);
    for (size_t e = 0; e < E; ++e) ++indeg[(o >> e & 1) ? g.edges[e].first : g.edges[e].second];
    bool ok = true;
    for (size_t i = 0; i < g.faces.size(); ++i) ok &= 2 * indeg[i] <= 4 - g.ed[i];
    if (ok) return true;
  }
  return false;
}

bool pureCycle(const RedGraph& g) {
  if (g.edges.size() != g.faces.size()) return false;
  std::vector<int> deg(g.faces.size(), 0);
  for (auto [a, b] : g.edges) ++deg[a], ++deg[b];
  for (int d : deg)
    if (d != 2) return false;
  return hasCycle(g);
}

}  // namespace

TEST_CASE("hexagon has one red graph and it is not admissible") {
  Web w = hexagonW();
  auto gs = enumerateRedGraphs(w);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].ed[0] == 6);
  CHECK(gs[0].twiceLevel() == -2);
  CHECK_FALSE(isAdmissible(gs[0]));
  CHECK_FALSE(hasExactRedGraph(w));
}

TEST_CASE("tree webs have no red graphs") {
  for (const Web& w : {tripod(Color::White), hWeb(), edgeWeb(Color::Black)}) {
    CHECK(enumerateRedGraphs(w).empty());
    CHECK_FALSE(hasExactRedGraph(w));
  }
}

TEST_CASE("enumeration agrees with the subset filter") {
  for (int k : {2, 3}) {
    Web t = honeycombUnclasped(k);
    if (internalFaces(t).size() > 20) continue;
    CHECK(enumerateRedGraphs(t).size() == bruteForceRedGraphCount(t));
  }
  CHECK(enumerateRedGraphs(honeycombUnclasped(2)).size() == 81);
  CHECK(enumerateRedGraphs(cupUnionWB(1)).size() == bruteForceRedGraphCount(cupUnionWB(1)));
  CHECK_THROWS_AS(enumerateRedGraphs(honeycombUnclasped(5)), WebError);
}

TEST_CASE("admissibility agrees with orientation search") {
  Web t = honeycombUnclasped(2);
  for (const auto& g : enumerateRedGraphs(t)) {
    std::vector<int> o;
    bool adm = isAdmissible(g, &o);
    CHECK(adm == bruteForceAdmissible(g));
    if (!adm) continue;
    auto lv = perVertexLevel(g, o);
    double sum = 0;
    for (double x : lv) {
      CHECK(x >= 0);
      sum += x;
    }
    CHECK(2 * sum == g.twiceLevel());
  }
}

TEST_CASE("thick two has a single exact red graph, the six ring") {
  Web t = honeycombUnclasped(2);
  auto ex = exactRedGraphs(t);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].faces.size() == 6);
  CHECK(pureCycle(ex[0]));
  CHECK(hasExactRedGraph(t));
  std::vector<int> o;
  REQUIRE(isAdmissible(ex[0], &o));
  for (double x : perVertexLevel(ex[0], o)) CHECK(x == 0);
}

TEST_CASE("exact red graphs on thick three have long cycles") {
  Web t = honeycombUnclasped(3);
  auto ex = exactRedGraphs(t);
  CHECK(ex.size() == 769);
  size_t cycles = 0;
  std::set<std::vector<int>> pure;
  for (const auto& g : ex) {
    CHECK(hasCycle(g));
    CHECK(girth(g) >= 6);
    if (pureCycle(g)) {
      ++cycles;
      pure.insert(g.faces);
    }
  }
  auto fromCycles = exactCycleRedGraphs(t);
  CHECK(fromCycles.size() == cycles);
  for (const auto& g : fromCycles) CHECK(pure.count(g.faces) == 1);
}

TEST_CASE("G-reductions keep the signature") {
  Web t = honeycombUnclasped(3);
  Signature s = signatureOf(t);
  size_t reduced = 0;
  for (const auto& g : exactCycleRedGraphs(t))
    for (const auto& p : pairings(t, g)) {
      Web r = gReduction(t, g, p);
      CHECK(signatureOf(r) == s);
      ++reduced;
    }
  CHECK(reduced > 0);
}

TEST_CASE("G-reductions of thick three without a boundary Y") {
  Web t = honeycombUnclasped(3);
  std::string wb = rotationClassKey(cupUnionWB(1));
  std::map<std::string, LaurentPoly> noY;
  for (const auto& g : exactCycleRedGraphs(t))
    for (const auto& p : pairings(t, g)) {
      WebCombo c = reduceToBasis(gReduction(t, g, p));
      for (const auto& [k, co] : c.terms)
        if (!hasBoundaryY(c.webs.at(k))) noY[rotationClassKey(c.webs.at(k))] += co;
    }
  REQUIRE(noY.size() == 1);
  CHECK(noY.begin()->first == wb);
  CHECK(noY.begin()->second == LaurentPoly(1));
}

TEST_CASE("invalid pairings are rejected") {
  Web t = honeycombUnclasped(2);
  auto ex = exactRedGraphs(t);
  REQUIRE(ex.size() == 1);
  CHECK_THROWS_AS(gReduction(t, ex[0], {}), WebError);
  CHECK_THROWS_AS(gReduction(t, ex[0], {{0, 1}}), WebError);
  auto j = redGraphToJson(ex[0], pairings(t, ex[0]));
  CHECK(j["exact"] == true);
  CHECK(j["level"] == 0);
  CHECK(j["faces"].size() == 6);
}
