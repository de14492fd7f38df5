#include <array>
#include <cstdlib>
#include <filesystem>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "sl3web/corpus.hpp"
#include "sl3web/webenum.hpp"
#include "sl3web/webio.hpp"

using namespace sl3web;

namespace {

Signature fromMask(int n, uint32_t m) {
  Signature s;
  for (int i = 0; i < n; ++i) s.letters.push_back(m >> i & 1 ? Color::White : Color::Black);
  return s;
}

// Removes a U, Y or H sitting on boundary points i, i + 1.
int peel(const Web& w, int i, Web* out) {
  int a = w.boundary[i], b = w.boundary[i + 1];
  int x = w.other(w.rot[a][0]), y = w.other(w.rot[b][0]);
  Web r = w;
  if (x == b) {
    r.kill(a);
    r.kill(b);
    r.boundary.erase(r.boundary.begin() + i, r.boundary.begin() + i + 2);
    *out = r.compacted();
    return 1;
  }
  if (!w.isInternal(x) || !w.isInternal(y)) return 0;
  if (x == y) {
    int keep = -1;
    for (int h : w.rot[x])
      if (w.other(h) != a && w.other(h) != b) keep = h;
    for (int h : w.rot[x])
      if (h != keep) r.hv[h] = a;
    r.kill(a);
    r.kill(b);
    r.kind[x] = VertexKind::Boundary;
    r.rot[x] = {keep};
    r.boundary[i] = x;
    r.boundary.erase(r.boundary.begin() + i + 1);
    *out = r.compacted();
    return 2;
  }
  int hxy = -1;
  for (int h : w.rot[x])
    if (w.other(h) == y) hxy = h;
  if (hxy < 0) return 0;
  int hx = -1, hy = -1;
  for (int h : w.rot[x])
    if (h != hxy && w.other(h) != a) hx = h;
  for (int h : w.rot[y])
    if (h != w.twin[hxy] && w.other(h) != b) hy = h;
  for (int h : w.rot[x])
    if (h != hx) r.hv[h] = a;
  for (int h : w.rot[y])
    if (h != hy) r.hv[h] = a;
  r.kill(a);
  r.kill(b);
  r.kind[x] = VertexKind::Boundary;
  r.rot[x] = {hx};
  r.kind[y] = VertexKind::Boundary;
  r.rot[y] = {hy};
  r.boundary[i] = x;
  r.boundary[i + 1] = y;
  *out = r.compacted();
  return 3;
}

}  // namespace

TEST_CASE("dimension examples") {
  CHECK(dimInvariants(Signature::parse("wb")) == 1);
  CHECK(dimInvariants(Signature::parse("www")) == 1);
  CHECK(dimInvariants(Signature::parse("ww")) == 0);
  CHECK(dimInvariants(Signature::parse("")) == 1);
  CHECK(dimInvariants(Signature::parse("wbwbwb")) == 6);
}

TEST_CASE("dimension agrees with the character oracle") {
  for (int n = 0; n <= 9; ++n)
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Signature s = fromMask(n, m);
      CHECK(dimInvariants(s) == oracle::characterOracle(s));
    }
}

TEST_CASE("non-elliptic webs fill the dimension") {
  for (int n = 0; n <= 8; ++n)
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Signature s = fromMask(n, m);
      auto ws = nonEllipticWebs(s);
      CHECK(ws.size() == dimInvariants(s));
      for (const Web& w : ws) {
        CHECK(isNonElliptic(w));
        CHECK(eulerDefect(w) == 0);
        CHECK(signatureOf(w) == s);
      }
    }
}

TEST_CASE("catalog examples") {
  auto c = enumerateBasis(Signature::parse("wb"));
  REQUIRE(c.size() == 1);
  CHECK(c.webs.begin()->first == StateString{1, -1});
  CHECK(canonicalKey(c.webs.begin()->second) == canonicalKey(edgeWeb(Color::White)));

  Web h = hexagonW();
  auto hc = enumerateBasis(signatureOf(h));
  bool found = false;
  for (const auto& [j, w] : hc.webs) found |= canonicalKey(w) == canonicalKey(h);
  CHECK(found);
  CHECK(canonicalKey(growthInverse(signatureOf(h), dominantPath(h))) == canonicalKey(h));
}

TEST_CASE("growth inverts the dominant path") {
  for (int n = 0; n <= 8; ++n)
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Signature s = fromMask(n, m);
      auto c = enumerateBasis(s);
      CHECK(c.size() == dimInvariants(s));
      for (const auto& [j, w] : c.webs) {
        CHECK(dominantPath(w) == j);
        CHECK(canonicalKey(growthInverse(s, j)) == canonicalKey(w));
        CHECK(canonicalKey(growByRules(s, j)) == canonicalKey(w));
      }
    }
}

TEST_CASE("local growth rules match the catalogs") {
  // Patterns with a determined piece: colors equal?, states, piece, new states.
  struct Rule {
    bool same;
    int a, b, piece;
    std::vector<int> after;
  };
  const std::vector<Rule> rules = {{true, 0, -1, 2, {-1}},      {true, 1, -1, 2, {0}},
                                   {true, 1, 0, 2, {1}},        {false, 1, -1, 1, {}},
                                   {false, 0, -1, 3, {-1, 0}},  {false, 0, 0, 3, {-1, 1}},
                                   {false, 1, 0, 3, {0, 1}}};
  int checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Signature s = fromMask(n, m);
      if (!dimInvariants(s)) continue;
      for (const auto& [j, w] : enumerateBasis(s).webs)
        for (int i = 0; i + 1 < n; ++i)
          for (const Rule& r : rules) {
            if (r.same != (s.letters[i] == s.letters[i + 1]) || j[i] != r.a || j[i + 1] != r.b) continue;
            Web rest;
            REQUIRE(peel(w, i, &rest) == r.piece);
            StateString expect(j.begin(), j.begin() + i);
            expect.insert(expect.end(), r.after.begin(), r.after.end());
            expect.insert(expect.end(), j.begin() + i + 2, j.end());
            CHECK(dominantPath(rest) == expect);
            ++checked;
          }
    }
  CHECK(checked > 1000);
}

TEST_CASE("growth of a thickened hexagon") {
  Web t = honeycombUnclasped(5);
  CHECK(canonicalKey(growthInverse(signatureOf(t), dominantPath(t))) == canonicalKey(t));
}

TEST_CASE("non-dominant paths are rejected") {
  Signature s = Signature::parse("wbwbwb");
  CHECK_THROWS_AS(growthInverse(s, {-1, 1, -1, 1, -1, 1}), WebError);
  CHECK_THROWS_AS(growByRules(s, {-1, 1, -1, 1, -1, 1}), WebError);
  CHECK_THROWS_AS(growthInverse(s, {1, -1}), WebError);
  CHECK_THROWS_AS(growByRules(Signature::parse("www"), {1, 1, 1}), WebError);
}

TEST_CASE("catalogs persist through the cache directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sl3web_catalog_test";
  fs::remove_all(dir);
  Signature s = Signature::parse("wwbwbb");
  auto c = enumerateBasis(s);
  saveCatalog(dir.string(), c);
  BasisCatalog back;
  REQUIRE(loadCatalog(dir.string(), s, &back));
  REQUIRE(back.size() == c.size());
  for (const auto& [j, w] : c.webs) CHECK(canonicalKey(back.lookup(j)) == canonicalKey(w));
  CHECK_FALSE(loadCatalog(dir.string(), Signature::parse("wbwb"), &back));
  fs::remove_all(dir);
}

TEST_CASE("web JSON round trip") {
  for (const Web& w : {hexagonW(), hWeb(), honeycomb(2), webB(), emptyWeb()}) {
    Web back = webFromJsonString(webToJsonString(w));
    CHECK(canonicalKey(back) == canonicalKey(w));
    CHECK(multiplicities(back) == multiplicities(w));
  }
  CHECK_THROWS_AS(webFromJsonString("{"), WebError);
  CHECK_THROWS_AS(webFromJsonString("{\"vertices\": []}"), WebError);
  auto j = webToJson(hexagonW());
  j["halfEdges"][0]["twin"] = 0;
  CHECK_THROWS_AS(webFromJson(j), WebError);
  CHECK(webToSvg(hexagonW()).find("<svg") == 0);
  CHECK(webToDot(hexagonW()).find("graph web") == 0);
}
