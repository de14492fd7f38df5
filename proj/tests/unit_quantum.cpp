#include "doctest.h"
#include "sl3web/corpus.hpp"
#include "sl3web/quantum.hpp"

using namespace sl3web;

namespace {

LaurentPoly vpow(int e) { return LaurentPoly::monomial(e); }

}  // namespace

TEST_CASE("cup tensor") {
  Expansion e = expandByContraction(edgeWeb(Color::White));
  CHECK(e.coeffs.size() == 3);
  CHECK(e.at({1, -1}) == vpow(0));
  CHECK(e.at({0, 0}) == vpow(-1));
  CHECK(e.at({-1, 1}) == vpow(-2));
  CHECK(dominantPath(edgeWeb(Color::White)) == StateString{1, -1});
}

TEST_CASE("tripod tensor") {
  Expansion e = expandByContraction(tripod(Color::White));
  CHECK(e.coeffs.size() == 6);
  CHECK(e.at({1, 0, -1}) == vpow(0));
  CHECK(e.at({0, 1, -1}) == vpow(-1));
  CHECK(e.at({1, -1, 0}) == vpow(-1));
  CHECK(e.at({0, -1, 1}) == vpow(-2));
  CHECK(e.at({-1, 1, 0}) == vpow(-2));
  CHECK(e.at({-1, 0, 1}) == vpow(-3));
}

TEST_CASE("two contracted tripods have twelve states") {
  Expansion e = expandByContraction(hWeb());
  CHECK(e.coeffs.size() == 12);
  CHECK(nonnegative(e));
  CHECK(leadingTermLaw(e));
}

TEST_CASE("contraction and flows agree and do not depend on the drawing") {
  std::vector<Web> ws = {edgeWeb(Color::Black), tripod(Color::Black), hWeb(), hexagonW(),
                         squareWeb(), bigonWeb(), honeycombUnclasped(2), cupUnionWB(1)};
  for (const Web& w : ws) {
    Expansion c = expandByContraction(w, 1);
    for (uint64_t s : {2, 3}) CHECK(expandByContraction(w, s) == c);
    CHECK(expandByFlows(w, 5) == c);
    for (const auto& [j, k] : c.coeffs) {
      CHECK(coefficientAt(w, j, 7) == k);
    }
  }
}

TEST_CASE("hexagon leading term") {
  Web w = hexagonW();
  Expansion e = expandByFlows(w);
  StateString lead;
  CHECK(leadingTermLaw(e, &lead));
  CHECK(dominantPath(w) == lead);
  CHECK(nonnegative(e));
}
