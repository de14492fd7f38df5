#include "doctest.h"
#include "sl3web/corpus.hpp"
#include "sl3web/discconfig.hpp"
#include "sl3web/webenum.hpp"

using namespace sl3web;

TEST_CASE("rotation chart calibration is unique and frozen") {
  auto found = calibrateRotationChart();
  REQUIRE(found.size() == 1);
  CHECK(found[0] == kRotationChart);
}

TEST_CASE("rotation between equal directions is trivial") {
  for (int p = 0; p < 6; ++p) {
    CHECK(rotationExponent(kRotationChart, Position(p), Position(p), true) == 0);
    CHECK(rotationExponent(kRotationChart, Position(p), Position(p), false) == 0);
  }
}

TEST_CASE("disc frames reproduce the flow expansion") {
  for (const Web& w : {hexagonW(), hWeb(), honeycombUnclasped(2)}) {
    DiscFrame df = discFrame(w);
    Expansion e = expandByFlows(w);
    CHECK(expandByFlows(df.frame) == e);
    CHECK(expandByContraction(df.frame) == e);
  }
}

TEST_CASE("disc configurations agree flow by flow") {
  for (double t : {0.0, 0.1, 0.25, 0.4, 0.9}) {
    DiscFrame df;
    REQUIRE(discFrameAt(hexagonW(), t, &df));
    for (const auto& [j, c] : expandByFlows(hexagonW()).coeffs)
      for (const Flow& f : flowsAt(df.frame, j)) CHECK(configurationOf(df, f).exponent() == f.exponent);
  }
}

TEST_CASE("disc configuration expansion of the hexagon") {
  Web w = hexagonW();
  Expansion d = expandByDiscConfig(w);
  CHECK(d == expandByFlows(w));
  StateString lead;
  CHECK(leadingTermLaw(d, &lead));
  CHECK(lead == dominantPath(w));
}

TEST_CASE("webs outside the hypothesis are rejected") {
  CHECK_FALSE(hasDiscFrame(cupUnionWB(1)));
  CHECK_THROWS_AS(expandByDiscConfig(squareWeb()), WebError);
}

TEST_CASE("tree basis webs on six and seven points agree flow by flow") {
  int framed = 0;
  for (const char* sig : {"wwbwbb", "bbwbwbb", "wbbbbwb"})
    for (const auto& [j, w] : enumerateBasis(Signature::parse(sig)).webs) {
      if (!hasDiscFrame(w)) continue;
      ++framed;
      DiscFrame df = discFrame(w);
      for (const auto& [s, c] : expandByFlows(w).coeffs)
        for (const Flow& f : flowsAt(df.frame, s)) CHECK(configurationOf(df, f).exponent() == f.exponent);
      CHECK(expandByDiscConfig(w) == expandByFlows(w));
    }
  CHECK(framed > 0);
}
