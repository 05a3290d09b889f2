#include "qhtoric/mpoly.hpp"

#include "doctest.h"
#include "qhtoric/errors.hpp"
#include "support.hpp"

using namespace qhtoric;
using qht::P;
using qht::Q;
using qht::vars;

TEST_CASE("parse and print round trip") {
  auto sys = vars({"x", "y"});
  CHECK(P(sys, "x^2 - 2*x + 1").str() == "x^2 - 2*x + 1");
  CHECK(P(sys, "3*x*y - y^2 + 1/2").str() == "3*x*y - y^2 + 1/2");
  CHECK(P(sys, "0").str() == "0");
  CHECK(P(sys, "x - x").str() == "0");
  CHECK(P(sys, "2*x*x*3").str() == "6*x^2");
  CHECK(P(sys, "-x^-2").str() == "-x^-2");
  CHECK(P(sys, "y + x").str() == "x + y");
}

TEST_CASE("parse rejects malformed input") {
  auto sys = vars({"x"});
  CHECK_THROWS_AS(P(sys, "z + 1"), ValidationError);
  CHECK_THROWS_AS(P(sys, "x^"), ValidationError);
  CHECK_THROWS_AS(P(sys, "x^1/2"), ValidationError);
  CHECK_THROWS_AS(P(sys, "x +"), ValidationError);
  CHECK_THROWS_AS(P(sys, "(x)"), ValidationError);
  CHECK_THROWS_AS(P(sys, ""), ValidationError);
}

TEST_CASE("graded lex leading term") {
  auto sys = vars({"x", "y"});
  CHECK(P(sys, "x^2 + x*y").leading().second == 1);
  CHECK(P(sys, "x^2 + x*y").str() == "x^2 + x*y");
  // same total degree: earlier variable dominates
  CHECK(P(sys, "x*y^2 + x^2*y").str() == "x^2*y + x*y^2");
  // higher total degree first regardless of lex
  CHECK(P(sys, "x^3 + y^4").str() == "y^4 + x^3");
}

TEST_CASE("ring identities") {
  auto sys = vars({"x", "y"});
  CHECK(P(sys, "x + y") * P(sys, "x - y") == P(sys, "x^2 - y^2"));
  CHECK(P(sys, "x + y").pow(3) == P(sys, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(MPoly::variable(sys, "x", -1) * MPoly::variable(sys, "x") ==
        MPoly::constant(sys, 1));
  CHECK(P(sys, "2*x^-1*y").pow(-2) == P(sys, "1/4*x^2*y^-2"));
}

TEST_CASE("derivative") {
  auto sys = vars({"x", "y"});
  CHECK(P(sys, "x^3*y + x").derivative(0) == P(sys, "3*x^2*y + 1"));
  CHECK(P(sys, "x^-1").derivative(0) == P(sys, "-x^-2"));
  CHECK(P(sys, "x^2").derivative(1) == P(sys, "0"));
}

TEST_CASE("evaluation and specialization") {
  auto sys = vars({"x", "y"});
  MPoly p = P(sys, "x^2*y - 2*x + 3");
  CHECK(p.eval({{"x", Q("2")}, {"y", Q("1/2")}}) == Q("1"));
  CHECK(p.specialize({{"y", Q("1/2")}}) == P(sys, "1/2*x^2 - 2*x + 3"));
  CHECK_THROWS_AS(P(sys, "x^-1").eval({{"x", Q("0")}, {"y", Q("1")}}), ValidationError);
  CHECK_THROWS_AS(P(sys, "x + y").eval({{"x", Q("1")}}), ValidationError);
}

TEST_CASE("monomial substitution") {
  auto sys = vars({"x", "y", "z"});
  MPoly p = P(sys, "z^2 + z");
  CHECK(p.substitute_monomial(sys->require("z"), Q("1"), {{sys->require("y"), 1}}) ==
        P(sys, "y^2 + y"));
  // x -> y^-1 z^-1
  MPoly q = P(sys, "x^2*y*z");
  CHECK(q.substitute_monomial(sys->require("x"), Q("1"),
                              {{sys->require("y"), -1}, {sys->require("z"), -1}}) ==
        P(sys, "y^-1*z^-1"));
  // with a coefficient: x -> 2y
  CHECK(P(sys, "x^2").substitute_monomial(sys->require("x"), Q("2"),
                                          {{sys->require("y"), 1}}) == P(sys, "4*y^2"));
}

TEST_CASE("exact division") {
  auto sys = vars({"x", "y"});
  CHECK(P(sys, "x^2 - y^2").divexact(P(sys, "x + y")) == P(sys, "x - y"));
  CHECK(P(sys, "x^-1 - x").divexact(P(sys, "1 - x")) == P(sys, "x^-1 + 1"));
  CHECK(P(sys, "0").divexact(P(sys, "x")) == P(sys, "0"));
  CHECK_THROWS_AS(P(sys, "x^2 + 1").divexact(P(sys, "x + 1")), InternalError);
  CHECK_THROWS_AS(P(sys, "x").divexact(P(sys, "0")), InternalError);
}

TEST_CASE("content and normalization") {
  auto sys = vars({"x", "y"});
  CHECK(P(sys, "4/3*x - 2*y").content_rational() == Q("2/3"));
  CHECK(P(sys, "-2*x^2*y^-1 - 4*x").normalized() == P(sys, "x + 2*y"));
  CHECK(P(sys, "0").normalized() == P(sys, "0"));
}

TEST_CASE("gcd of multivariate polynomials") {
  auto sys = vars({"x", "y"});
  CHECK(gcd(P(sys, "x^2 - y^2"), P(sys, "x^2 + 2*x*y + y^2")) == P(sys, "x + y"));
  CHECK(gcd(P(sys, "2*x + 2*y"), P(sys, "4*x^2 - 4*y^2")) == P(sys, "x + y"));
  CHECK(gcd(P(sys, "x^2 + 1"), P(sys, "x + 3")) == P(sys, "1"));
  // monomials are units of the Laurent ring, so they never survive in a gcd
  CHECK(gcd(P(sys, "0"), P(sys, "-3*x*y")) == P(sys, "1"));
  CHECK(gcd(P(sys, "x^3*y"), P(sys, "x*y^3")) == P(sys, "1"));
  // common factor with mixed content
  MPoly g = P(sys, "x*y + 1");
  MPoly a = g * P(sys, "x^2 + y");
  MPoly b = g * P(sys, "y^2 - 2");
  CHECK(gcd(a, b) == g);
}

TEST_CASE("apply_relations carries declared substitutions") {
  ParamSystem::Builder b;
  b.add_param("x").add_param("y").add_param("z");
  b.add_relation("z", {{"y", 1}});
  auto sys = b.build();
  MPoly p = P(sys, "x*z^2 + z - y");
  MPoly q = p.apply_relations();
  CHECK(q.system()->size() == 2);
  CHECK(q == P(q.system(), "x*y^2"));
}

TEST_CASE("map_onto matches variables by name") {
  auto small = vars({"x"});
  auto big = vars({"w", "x"});
  CHECK(P(small, "x^2 + 1").map_onto(big) == P(big, "x^2 + 1"));
  CHECK_THROWS_AS(P(big, "w + x").map_onto(small), ValidationError);
}
