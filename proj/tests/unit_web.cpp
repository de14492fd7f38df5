#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "sl3web/corpus.hpp"
#include "sl3web/layout.hpp"
#include "sl3web/superimpose.hpp"
#include "sl3web/web.hpp"

using namespace sl3web;

namespace {

// Random relabeling of vertices and half-edges; rotations unchanged.
Web relabel(const Web& w, uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<int> vp(w.numVertices()), hp(w.numHalfEdges());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(hp.begin(), hp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(hp.begin(), hp.end(), rng);
  Web r;
  r.kind.resize(w.numVertices());
  r.color.resize(w.numVertices());
  r.rot.resize(w.numVertices());
  r.over.resize(w.numVertices());
  r.alive.assign(w.numVertices(), 1);
  r.hv.resize(w.numHalfEdges());
  r.twin.resize(w.numHalfEdges());
  for (int v = 0; v < w.numVertices(); ++v) {
    r.kind[vp[v]] = w.kind[v];
    r.color[vp[v]] = w.color[v];
    r.over[vp[v]] = w.over[v];
    std::vector<int> rr;
    for (int h : w.rot[v]) rr.push_back(hp[h]);
    if (!w.isBoundary(v) && !rr.empty()) {
      int s = static_cast<int>(rng() % rr.size());
      if (w.isCrossing(v)) s &= ~1;
      std::rotate(rr.begin(), rr.begin() + s, rr.end());
    }
    r.rot[vp[v]] = rr;
  }
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    r.hv[hp[h]] = vp[w.hv[h]];
    r.twin[hp[h]] = hp[w.twin[h]];
  }
  for (int b : w.boundary) r.boundary.push_back(vp[b]);
  r.loops = w.loops;
  return r;
}

}  // namespace

TEST_CASE("hexagon web basics") {
  Web w = hexagonW();
  w.validate();
  CHECK(signatureOf(w).str() == "bwbwbw");
  auto faces = internalFaces(w);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].size() == 6);
  CHECK(isNonElliptic(w));
  CHECK(eulerDefect(w) == 0);
  for (uint32_t s = 1; s < 30; ++s) CHECK(canonicalKey(relabel(w, s)) == canonicalKey(w));
  CHECK(canonicalKey(w) != canonicalKey(rotateMarked(w, 1)));
  CHECK(canonicalKey(w) == canonicalKey(rotateMarked(w, 2)));
}

TEST_CASE("small webs") {
  Web t = tripod(Color::White);
  t.validate();
  CHECK(internalFaces(t).empty());
  CHECK(canonicalKey(t) != canonicalKey(hexagonW()));
  Web b = bigonWeb();
  b.validate();
  auto bf = internalFaces(b);
  REQUIRE(bf.size() == 1);
  CHECK(bf[0].size() == 2);
  CHECK_FALSE(isNonElliptic(b));
  Web s = squareWeb();
  s.validate();
  CHECK_FALSE(isNonElliptic(s));
  hWeb().validate();
  CHECK(isNonElliptic(hWeb()));
  webB().validate();
  CHECK(isNonElliptic(webB()));
}

TEST_CASE("honeycomb thickenings") {
  for (int k = 1; k <= 5; ++k) {
    Web u = honeycombUnclasped(k);
    u.validate();
    CHECK(u.numInternal() == 6 * k * k);
    CHECK(u.numBoundary() == 6 * k);
    CHECK(isNonElliptic(u));
    CHECK(internalFaces(u).size() == static_cast<size_t>(3 * k * (k - 1) + 1));
    Web c = honeycomb(k);
    c.validate();
    CHECK(c.numBoundary() == 6);
    CHECK(signatureOf(unclasp(c)).letters.size() == static_cast<size_t>(6 * k));
    CHECK(canonicalKey(unclasp(clasp(unclasp(c), thickRuns(k)))) == canonicalKey(unclasp(c)));
  }
  CHECK(signatureOf(honeycombUnclasped(5)) == Signature::parse(signatureS5()));
  CHECK(signatureOf(honeycombUnclasped(3)) == Signature::parse(signatureS3()));
  CHECK(unclasp(honeycomb(2)).numBoundary() == 12);
}

TEST_CASE("cup unions") {
  Web wbb = cupUnionWB(2);
  wbb.validate();
  CHECK(signatureOf(wbb) == Signature::parse(signatureS5()));
  CHECK(isNonElliptic(wbb));
  Web wb = cupUnionWB(1);
  wb.validate();
  CHECK(signatureOf(wb) == Signature::parse(signatureS3()));
  CHECK_THROWS_AS(clasp(hexagonW(), {2, 2, 2}), WebError);
}

TEST_CASE("layouts reproduce rotation systems") {
  for (const Web& w : {hexagonW(), hWeb(), webB(), honeycombUnclasped(2), honeycombUnclasped(5), cupUnionWB(2)}) {
    CHECK_NOTHROW(tutteLayout(w, LayoutFrame::Disc));
    CHECK_NOTHROW(tutteLayout(w, LayoutFrame::UpperHalf));
  }
}

TEST_CASE("superimposition of two hexagons") {
  Web w = hexagonW();
  Web d = superimpose({w, w});
  d.validate();
  CHECK(d.numBoundary() == 6);
  CHECK(d.numCrossings() > 0);
  CHECK(canonicalKey(superimpose({w})) == canonicalKey(w));
}
