#include <random>

#include "doctest.h"
#include "sl3web/laurent.hpp"

using sl3web::LaurentPoly;
using sl3web::quantumInt;

namespace {

LaurentPoly v(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

LaurentPoly randomPoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-4, 4), co(-5, 5), den(1, 3), cnt(0, 4);
  LaurentPoly p;
  int n = cnt(rng);
  for (int i = 0; i < n; ++i) p.addTerm(ex(rng), mpq_class(co(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic examples") {
  CHECK((v(1) + v(1, -1)).isZero());
  CHECK((LaurentPoly(1) + v(-1)) + v(-1) == LaurentPoly(1) + v(-1, 2));
  CHECK(quantumInt(3) + LaurentPoly() == quantumInt(3));
  CHECK(v(1) * v(-1) == LaurentPoly(1));
  CHECK((LaurentPoly() * quantumInt(3)).isZero());
}

TEST_CASE("quantum integers in v") {
  CHECK(quantumInt(1) == LaurentPoly(1));
  CHECK(quantumInt(2) == v(1, -1) + v(-1, -1));
  CHECK(quantumInt(3) == v(2) + LaurentPoly(1) + v(-2));
  // [2]^2 from (q^{1/2} + q^{-1/2})^2 = q + 2 + q^{-1}, and q = v^2
  CHECK(quantumInt(2) * quantumInt(2) == v(2) + LaurentPoly(2) + v(-2));
  for (int n = 1; n <= 9; ++n) {
    CHECK(quantumInt(n).bar() == quantumInt(n));
    CHECK(quantumInt(n).classicalLimit() == n);
  }
  CHECK(quantumInt(0).isZero());
}

TEST_CASE("bar and classical limit") {
  CHECK(v(1).bar() == v(-1));
  CHECK(LaurentPoly().classicalLimit() == 0);
  CHECK(quantumInt(2).classicalLimit() == 2);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a * b).classicalLimit() == a.classicalLimit() * b.classicalLimit());
    CHECK((a + b).classicalLimit() == a.classicalLimit() + b.classicalLimit());
    CHECK(LaurentPoly::parse(a.toString()) == a);
  }
}

TEST_CASE("negative exponent predicate") {
  CHECK((v(-1) + v(-3, 2)).negativeExponentOnly());
  CHECK_FALSE((LaurentPoly(1) + v(-1)).negativeExponentOnly());
  CHECK(LaurentPoly().negativeExponentOnly());
  CHECK_FALSE(LaurentPoly::monomial(-2, mpq_class(1, 2)).negativeExponentOnly());
}

TEST_CASE("text form") {
  CHECK(quantumInt(3).toString() == "v^2 + 1 + v^-2");
  CHECK((v(1, -1) + v(-1, -1)).toString() == "-v - v^-1");
  CHECK(LaurentPoly::parse("3/2*v^-1 - 2 + v^3") == v(3) + LaurentPoly(-2) + LaurentPoly::monomial(-1, mpq_class(3, 2)));
  CHECK(LaurentPoly::parse("0").isZero());
  CHECK_THROWS(LaurentPoly::parse("v^"));
  CHECK_THROWS(LaurentPoly::parse("2 3"));
}
