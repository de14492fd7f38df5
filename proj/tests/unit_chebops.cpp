#include "doctest.h"
#include "sl3web/chebops.hpp"
#include "sl3web/corpus.hpp"
#include "sl3web/superimpose.hpp"

using namespace sl3web;

namespace {

BiPoly mono(int i, int j, int64_t v) {
  BiPoly p;
  p.c[{i, j}] = v;
  return p;
}

}  // namespace

TEST_CASE("Chebyshev examples") {
  BiPoly t2 = mono(2, 0, 1);
  t2 += mono(0, 1, -2);
  CHECK(chebT(2).p == t2);
  BiPoly u3 = mono(3, 0, 1);
  u3 += mono(1, 1, -2);
  CHECK(chebU(3).p == u3);
  BiPoly u5 = mono(5, 0, 1);
  u5 += mono(3, 1, -4);
  u5 += mono(1, 2, 3);
  CHECK(chebU(5).p == u5);
  CHECK(chebT(0).p == BiPoly::constant(2));
  CHECK(chebU(0).p == BiPoly::constant(1));
  CHECK(chebT(3).p.str() == "x^3 - 3xy");
}

TEST_CASE("Chebyshev recursion and derivative") {
  for (int k = 2; k <= 12; ++k)
    for (ChebKind kind : {ChebKind::First, ChebKind::Second}) {
      BiPoly r = cheb(kind, k).p;
      r -= BiPoly::x() * cheb(kind, k - 1).p;
      r += BiPoly::y() * cheb(kind, k - 2).p;
      CHECK(r.c.empty());
    }
  for (int k = 1; k <= 12; ++k) CHECK(chebT(k).p.dx() == chebU(k - 1).p.scaled(k));
}

TEST_CASE("monomials in Chebyshev polynomials") {
  auto t3 = monomialInCheb(3, ChebKind::First);
  CHECK(t3.terms == std::map<std::pair<int, int>, int64_t>{{{3, 0}, 1}, {{1, 1}, 3}});
  auto u3 = monomialInCheb(3, ChebKind::Second);
  CHECK(u3.terms == std::map<std::pair<int, int>, int64_t>{{{3, 0}, 1}, {{1, 1}, 2}});
  CHECK(monomialInCheb(1, ChebKind::First).terms.size() == 1);
  for (int k = 1; k <= 12; ++k)
    for (ChebKind kind : {ChebKind::First, ChebKind::Second}) {
      auto m = monomialInCheb(k, kind);
      CHECK(m.positive());
      CHECK(m.expand() == mono(k, 0, 1));
    }
  CHECK_THROWS_AS(monomialInCheb(0, ChebKind::First), WebError);
}

TEST_CASE("thickening by reduction matches the honeycomb") {
  Web w = hexagonW();
  CHECK(canonicalKey(thick(w, 1)) == canonicalKey(w));
  for (int k = 2; k <= 4; ++k) CHECK(canonicalKey(thick(w, k)) == canonicalKey(honeycomb(k)));
  for (int k = 2; k <= 3; ++k) {
    Web t = thick(tripod(Color::White), k);
    CHECK(t.numInternal() > 0);
    CHECK(isNonElliptic(t));
  }
}

TEST_CASE("bracelet and band base cases") {
  Web w = hexagonW();
  CHECK(bracelet(w, 0) == unitCombo(2));
  CHECK(band(w, 0) == unitCombo(1));
  CHECK(bracelet(w, 1) == comboOf(w));
  CHECK(band(w, 1) == comboOf(w));
  WebCombo b = coefficientWebB(w);
  REQUIRE(b.size() == 1);
  CHECK(b.terms.begin()->second == LaurentPoly(1));
  CHECK(canonicalKey(b.webs.begin()->second) == canonicalKey(webB()));
}

TEST_CASE("bracelet and band identities on the hexagon") {
  Web w = hexagonW();
  ChebReport r = verifyBracelet(w, 4);
  CHECK_MESSAGE(r.ok, r.firstDifference);
  ChebReport u = verifyBand(w, 3);
  CHECK_MESSAGE(u.ok, u.firstDifference);
  WebCombo x = comboOf(w);
  WebCombo y = coefficientWebB(w);
  WebCombo sq = comboProduct(x, x);
  sq += y.scaled(LaurentPoly(-2));
  CHECK(bracelet(w, 2) == sq);
}

TEST_CASE("bracelet does not depend on the cut edge") {
  Web w = hexagonW();
  WebCombo ref = bracelet(w, 3);
  int tried = 0;
  for (int h = 0; h < w.numHalfEdges(); ++h) {
    if (!w.isInternal(w.hv[h]) || !w.isInternal(w.other(h))) continue;
    CHECK(reduceToBasis(permutedCable(w, 3, {1, 2, 0}, h)) == ref);
    ++tried;
  }
  CHECK(tried == 12);
}

TEST_CASE("single-cycle precondition") {
  CHECK_THROWS_AS(bracelet(hWeb(), 2), WebError);
  CHECK_THROWS_AS(band(honeycombUnclasped(2), 2), WebError);
  CHECK_NOTHROW(requireSingleCycle(hexagonW()));
  CHECK(cycleCount(honeycomb(2)) == cycleCount(honeycombUnclasped(2)));
}
