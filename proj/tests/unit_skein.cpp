#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sl3web/classical.hpp"
#include "sl3web/layout.hpp"
#include "sl3web/quantum.hpp"
#include "sl3web/corpus.hpp"
#include "sl3web/randomweb.hpp"
#include "sl3web/skein.hpp"

using namespace sl3web;

namespace {

mpq_class evalTerms(const std::vector<WeightedDiagram>& ts, const Configuration& c) {
  mpq_class s = 0;
  for (const auto& t : ts) s += t.coeff.classicalLimit() * evalNumeric(t.web, c);
  return s;
}

// Two strands between four boundary points; the first bulges across the
// second when crossed.
Web twoStrands(Color tl, Color tr, bool crossed, int layerA) {
  Drawing d;
  auto at = [](double deg) {
    double a = deg * 3.14159265358979323846 / 180;
    return Pt{std::cos(a), std::sin(a)};
  };
  int a0 = d.addVertex(VertexKind::Boundary, tl, at(135));
  int b0 = d.addVertex(VertexKind::Boundary, tr, at(45));
  int b1 = d.addVertex(VertexKind::Boundary, opposite(tr), at(-45));
  int a1 = d.addVertex(VertexKind::Boundary, opposite(tl), at(-135));
  d.boundary = {a0, b0, b1, a1};
  d.addEdge(a0, a1, {crossed ? Pt{0.6, 0.05} : Pt{-0.3, 0.01}}, layerA);
  d.addEdge(b0, b1, {Pt{0.3, -0.02}}, 1 - layerA);
  return webFromDrawing(d);
}

Expansion expandCombo(const WebCombo& c) {
  Expansion out;
  for (const auto& [k, coeff] : c.terms) {
    for (const auto& [j, x] : expandByContraction(c.webs.at(k)).coeffs) {
      LaurentPoly s = out.at(j) + coeff * x;
      if (s.isZero()) out.coeffs.erase(j);
      else out.coeffs[j] = s;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single rewrites preserve the classical value") {
  std::mt19937_64 rng(17);
  Web b = bigonWeb();
  auto r = removeBigon(b, SkeinMode::Commutative);
  Web sq = squareWeb();
  auto s = resolveSquare(sq, SkeinMode::Commutative);
  for (int t = 0; t < 5; ++t) {
    Configuration cb = randomConfiguration(b, rng);
    CHECK(evalNumeric(b, cb) == r.coeff.classicalLimit() * evalNumeric(r.web, cb));
    Configuration cs = randomConfiguration(sq, rng);
    CHECK(evalNumeric(sq, cs) == evalTerms(s, cs));
  }
  int crossed = 0;
  for (int i = 0; i < 60; ++i) {
    Web d = randomDiagram(rng);
    if (d.numCrossings() == 0) continue;
    ++crossed;
    auto ts = resolveCrossing(d, SkeinMode::Commutative);
    Configuration c = randomConfiguration(d, rng);
    CHECK(evalNumeric(d, c) == evalTerms(ts, c));
  }
  CHECK(crossed > 10);
}

TEST_CASE("eager simplification preserves the classical value") {
  std::mt19937_64 rng(23);
  SkeinEngine eng(SkeinMode::Commutative);
  for (int i = 0; i < 80; ++i) {
    Web d = randomDiagram(rng);
    Web w = d;
    LaurentPoly k(1);
    bool alive = eng.simplify(w, k);
    Configuration c = randomConfiguration(d, rng);
    mpq_class want = evalNumeric(d, c);
    CHECK(want == (alive ? k.classicalLimit() * evalNumeric(w, c) : mpq_class(0)));
  }
}

TEST_CASE("reduction is sound and reaches non-elliptic webs") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    Web d = randomDiagram(rng);
    WebCombo r = reduceToBasis(d);
    for (const auto& [k, w] : r.webs) CHECK(isNonElliptic(w));
    for (int t = 0; t < 3; ++t) {
      Configuration c = randomConfiguration(d, rng);
      CHECK(evalNumeric(d, c) == evalComboNumeric(r, c));
    }
  }
}

TEST_CASE("reduction does not depend on the rule order") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    Web d = randomDiagram(rng);
    WebCombo base = reduceToBasis(d);
    for (uint64_t s = 1; s <= 4; ++s) {
      SkeinEngine e(SkeinMode::Commutative);
      CHECK(e.reduce(d, s * 7919 + i) == base);
    }
  }
}

TEST_CASE("quantum crossings satisfy the second Reidemeister move") {
  for (Color tl : {Color::White, Color::Black})
    for (Color tr : {Color::White, Color::Black})
      for (int over : {0, 1}) {
        Web x = twoStrands(tl, tr, true, over);
        REQUIRE(x.numCrossings() == 2);
        int signs = 0;
        for (int v = 0; v < x.numVertices(); ++v)
          if (x.kind[v] == VertexKind::Crossing) signs += crossingSign(x, v);
        CHECK(signs == 0);
        CHECK(reduceToBasis(x, SkeinMode::Quantum) ==
              reduceToBasis(twoStrands(tl, tr, false, over), SkeinMode::Quantum));
      }
}

TEST_CASE("quantum planar reduction preserves the tensor expansion") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int i = 0; i < 80 && checked < 25; ++i) {
    Web d = randomDiagram(rng, 8, 0);
    if (d.numCrossings() > 0 || d.numBoundary() == 0) continue;
    bool unclasped = true;
    for (int b : d.boundary) unclasped = unclasped && d.degree(b) == 1;
    if (!unclasped) continue;
    Expansion e;
    try {
      e = expandByContraction(d);
    } catch (const WebError&) {
      continue;  // closed components away from the boundary
    }
    ++checked;
    CHECK(expandCombo(reduceToBasis(d, SkeinMode::Quantum)) == e);
  }
  CHECK(checked >= 10);
}

TEST_CASE("quantum reduction does not depend on the rule order") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    Web d = randomDiagram(rng);
    WebCombo base;
    try {
      base = reduceToBasis(d, SkeinMode::Quantum);
    } catch (const WebError&) {
      continue;
    }
    ++checked;
    for (uint64_t s = 1; s <= 3; ++s) {
      SkeinEngine e(SkeinMode::Quantum);
      CHECK(e.reduce(d, s * 104729 + i) == base);
    }
  }
  CHECK(checked >= 20);
}
