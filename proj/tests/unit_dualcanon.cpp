#include "doctest.h"
#include "sl3web/corpus.hpp"
#include "sl3web/dualcanon.hpp"
#include "sl3web/webenum.hpp"

using namespace sl3web;

TEST_CASE("hexagon and arcs are dual canonical") {
  CanonVerdict w = negativeExponentCheck(hexagonW());
  CHECK(w.status == CanonStatus::DualCanonical);
  CHECK(w.evidence == "no exact red graph");
  CanonVerdict b = negativeExponentCheck(unclasp(webB()));
  CHECK(b.status == CanonStatus::DualCanonical);
  CHECK(cupClosure({w, b}).status == CanonStatus::DualCanonical);
  CHECK(cupClosure({w, b, b}).status == CanonStatus::DualCanonical);
  CHECK(verdictToJson(w)["status"] == "dual_canonical");
}

TEST_CASE("cup closure needs certified operands") {
  CanonVerdict unknown;
  CanonVerdict dc;
  dc.status = CanonStatus::DualCanonical;
  CHECK(cupClosure({dc, unknown}).status == CanonStatus::Unknown);
  CanonVerdict bad;
  bad.status = CanonStatus::NotDualCanonical;
  CHECK(cupClosure({dc, bad}).status == CanonStatus::Unknown);
  CHECK_THROWS_AS(cupClosure({}), WebError);
}

TEST_CASE("thick two fails the negative exponent property") {
  Web t = honeycombUnclasped(2);
  CanonVerdict v = negativeExponentCheck(t);
  REQUIRE(v.status == CanonStatus::NotDualCanonical);
  CHECK(v.witness < v.leader);
  CHECK(v.witnessExponent >= 0);
  CHECK_NOTHROW(checkWitness(t, v));
  CanonVerdict forged = v;
  forged.coefficient = LaurentPoly::monomial(-2, 5);
  CHECK_THROWS_AS(checkWitness(t, forged), WebError);
}

TEST_CASE("thick three fails at the state of W cup B") {
  Web t = honeycombUnclasped(3);
  CanonVerdict v = negativeExponentCheck(t, {dominantPath(cupUnionWB(1))});
  REQUIRE(v.status == CanonStatus::NotDualCanonical);
  CHECK(v.coefficient.coeff(0) == 2);
  CHECK_NOTHROW(checkWitness(t, v));
}

TEST_CASE("small basis webs are dual canonical") {
  size_t n = 0;
  for (const char* s : {"wbwbwb", "wwwbbb", "wwbwbb", "wbwbwbwb", "wwwwbbbb", "wwbbwwbb",
                        "wwwwww", "wwwwwwwww"}) {
    for (const auto& [j, w] : enumerateBasis(Signature::parse(s)).webs) {
      CHECK(negativeExponentCheck(w).status == CanonStatus::DualCanonical);
      ++n;
    }
  }
  CHECK(n > 30);
}
