#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sl3web/classical.hpp"
#include "sl3web/corpus.hpp"
#include "sl3web/randomweb.hpp"

using namespace sl3web;

namespace {

Vec3 e(int i) {
  Vec3 v{mpq_class(0), mpq_class(0), mpq_class(0)};
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("tripods evaluate to the volume form") {
  Web t = tripod(Color::Black);
  Configuration c;
  c.vectors = {e(0), e(1), e(2)};
  CHECK(evalNumeric(t, c) == 1);
  c.vectors = {e(1), e(0), e(2)};
  CHECK(evalNumeric(t, c) == -1);
  Web s = tripod(Color::White);
  Configuration d;
  d.covectors = {e(0), e(1), e(2)};
  CHECK(evalNumeric(s, d) == 1);
}

TEST_CASE("an edge pairs a vector with a covector") {
  Web w = edgeWeb(Color::White);
  Configuration c;
  c.covectors = {Vec3{mpq_class(1), mpq_class(2), mpq_class(3)}};
  c.vectors = {Vec3{mpq_class(4), mpq_class(-5), mpq_class(6)}};
  CHECK(evalNumeric(w, c) == 4 - 10 + 18);
}

TEST_CASE("frontier contraction agrees with brute force") {
  std::mt19937_64 rng(11);
  std::vector<Web> ws = {hexagonW(), hWeb(), squareWeb(), bigonWeb(), webB(), honeycomb(2)};
  for (int i = 0; i < 40; ++i) ws.push_back(randomDiagram(rng));
  for (const Web& w : ws) {
    for (int t = 0; t < 3; ++t) {
      Configuration c = randomConfiguration(w, rng);
      CHECK(evalNumeric(w, c) == oracle::bruteEval(w, c));
    }
  }
}

TEST_CASE("evaluations are invariant under unimodular change of basis") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Web w = randomDiagram(rng);
    Configuration c = randomConfiguration(w, rng);
    Mat3 g = randomUnimodular(rng);
    CHECK(evalNumeric(w, c) == evalNumeric(w, actOn(c, g)));
  }
}

TEST_CASE("disjoint pieces multiply") {
  std::mt19937_64 rng(3);
  Web a = hexagonW(), b = hWeb();
  Web u = disjointUnion(a, b);
  Configuration ca = randomConfiguration(a, rng), cb = randomConfiguration(b, rng);
  Configuration cu;
  cu.covectors = ca.covectors;
  cu.covectors.insert(cu.covectors.end(), cb.covectors.begin(), cb.covectors.end());
  cu.vectors = ca.vectors;
  cu.vectors.insert(cu.vectors.end(), cb.vectors.begin(), cb.vectors.end());
  CHECK(evalNumeric(u, cu) == evalNumeric(a, ca) * evalNumeric(b, cb));
  CHECK(evalNumeric(loopWeb(), Configuration{}) == 3);
}
