#include "qhtoric/ssalg.hpp"

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "qhtoric/batyrev.hpp"
#include "qhtoric/errors.hpp"
#include "qhtoric/models.hpp"
#include "support.hpp"

using namespace qhtoric;
using qht::P;

namespace {

ParamSystemPtr ring(std::initializer_list<std::string> params,
                    std::initializer_list<std::string> ring_vars) {
  ParamSystem::Builder b;
  for (const auto& n : params) b.add_param(n);
  for (const auto& n : ring_vars) b.add_ring_var(n);
  return b.build();
}

UniPoly U(const ParamSystemPtr& sys, const std::string& text, const std::string& var = "X") {
  return as_unipoly(P(sys, text), var);
}

}  // namespace

TEST_CASE("univariate quotient multiplies like the residue ring") {
  ParamSystemPtr sys = ring({}, {"X"});
  FDAlgebra alg = univariate_quotient(U(sys, "X^2 - 1"));

  REQUIRE(alg.dim() == 2);
  CHECK(alg.basis() == std::vector<std::string>{"1", "X"});
  CHECK(alg.unity() == alg.basis_vec(0));
  // X * X = 1
  CHECK(alg.product(1, 1) == alg.basis_vec(0));

  // (1 + X)^2 = 2 + 2X
  std::vector<FieldElem> a = alg.mul(alg.unity(), alg.basis_vec(1));
  a[0] = FieldElem::one(sys);
  std::vector<FieldElem> sq = alg.mul(a, a);
  CHECK(sq[0] == FieldElem::from_rational(sys, 2));
  CHECK(sq[1] == FieldElem::from_rational(sys, 2));

  CHECK_THROWS_AS(univariate_quotient(U(sys, "3")), ValidationError);
}

TEST_CASE("the quotient table carries parameters through") {
  ParamSystemPtr sys = ring({"x"}, {"X"});
  FDAlgebra alg = univariate_quotient(U(sys, "X^3 - x*X - 1"));
  REQUIRE(alg.dim() == 3);
  // X^2 * X^2 = X * (x X + 1) = x X^2 + X
  std::vector<FieldElem> p = alg.product(2, 2);
  CHECK(p[0].is_zero());
  CHECK(p[1] == FieldElem::one(sys));
  CHECK(p[2] == FieldElem(P(sys, "x")));
}

TEST_CASE("malformed tables are rejected") {
  ParamSystemPtr sys = ring({}, {"X"});
  FDAlgebra good = univariate_quotient(U(sys, "X^2 - 1"));

  // break commutativity
  auto table = std::vector<std::vector<std::vector<FieldElem>>>{
      {good.product(0, 0), good.product(0, 1)},
      {good.basis_vec(1), good.product(1, 1)}};
  table[1][0][0] = FieldElem::one(sys);
  CHECK_THROWS_AS(FDAlgebra(sys, {"1", "X"}, table, good.unity()), ValidationError);

  // break associativity: e1*e1 = e0 but unity fixed, on a 2-dim table where
  // (e1 e1) e1 = e1 while e1 (e1 e1) must match; corrupt one side via unity row
  auto t2 = std::vector<std::vector<std::vector<FieldElem>>>{
      {good.product(0, 0), good.product(0, 1)},
      {good.product(1, 0), good.basis_vec(1)}};
  // now e1*e1 = e1, e0 unity: (e1 e1) e1 = e1, fine; instead corrupt closure
  t2[1][1] = good.mul(good.basis_vec(1), good.basis_vec(1));
  t2[1][1][0] = FieldElem::from_rational(sys, 2);  // e1^2 = 2*e0
  // assoc: (e1 e1) e1 = 2 e1, e1 (e1 e1) = 2 e1 -- still fine, so break unity
  std::vector<FieldElem> bad_unity = good.basis_vec(1);
  CHECK_THROWS_AS(FDAlgebra(sys, {"1", "X"}, t2, bad_unity), ValidationError);
}

TEST_CASE("nonvanishing search walks the candidate schedule") {
  ParamSystemPtr sys = ring({"x", "y", "z"}, {});

  // vanishes at the all-ones point, caught at the first prime
  auto w = nonvanishing_test(P(sys, "x - y"));
  REQUIRE(w.has_value());
  CHECK(w->point.at("x") == Rational(3, 2));
  CHECK(w->point.at("y") == Rational(2));
  CHECK(w->value == Rational(-1, 2));

  // the avoid list vetoes candidates, it does not make them count as zero
  auto w2 = nonvanishing_test(P(sys, "x + y"), {P(sys, "x - y")});
  REQUIRE(w2.has_value());
  CHECK(w2->value == Rational(7, 2));

  CHECK(!nonvanishing_test(MPoly::zero(sys)).has_value());

  // only occurring variables are assigned
  auto w3 = nonvanishing_test(P(sys, "z - 2"));
  REQUIRE(w3.has_value());
  CHECK(w3->point.size() == 1);
  CHECK(w3->point.count("z") == 1);
}

TEST_CASE("certify_nonzero strips unit factors before evaluating") {
  ParamSystemPtr sys = ring({"x", "y", "z"}, {});
  MPoly q = P(sys, "x^-1*y^3 - x^-1*y^2*z - x^-1*y*z^2 + x^-1*z^3");  // x^-1 (y-z)^2 (y+z)

  auto w = certify_nonzero("demo", q, {P(sys, "y - z")});
  REQUIRE(w.has_value());
  REQUIRE(w->units.size() == 2);
  CHECK(w->units[0] == P(sys, "x^-1"));
  CHECK(w->mult[0] == 1);
  CHECK(w->units[1] == P(sys, "y - z"));
  CHECK(w->mult[1] == 2);
  CHECK(w->reduced == P(sys, "y + z"));
  CHECK(w->value == Rational(2));  // all-ones works once the units are gone

  Certificate cert;
  cert.verdict = Verdict::Semisimple;
  cert.nonzero.push_back(*w);
  CHECK(reverify(cert));

  // tampering breaks the reconstruction identity or the evaluation
  Certificate bad = cert;
  bad.nonzero[0].value = Rational(3);
  CHECK(!reverify(bad));
  bad = cert;
  bad.nonzero[0].reduced = P(sys, "y + 2*z");
  CHECK(!reverify(bad));
  bad = cert;
  bad.nonzero[0].mult[1] = 1;
  CHECK(!reverify(bad));
}

TEST_CASE("a repeated factor yields a nilpotent witness with minimal power") {
  ParamSystemPtr sys = ring({}, {"X"});

  auto w = nilpotent_witness(U(sys, "X^3"));
  REQUIRE(w.has_value());
  CHECK(w->element == U(sys, "X"));
  CHECK(w->power == 3);

  Certificate cert;
  cert.verdict = Verdict::NotSemisimple;
  cert.nilpotent = *w;
  CHECK(reverify(cert));

  Certificate bad = cert;
  bad.nilpotent->power = 2;  // X^2 != 0 mod X^3
  CHECK(!reverify(bad));
  bad = cert;
  bad.nilpotent->power = 4;  // vanished already at 3
  CHECK(!reverify(bad));
  bad = cert;
  bad.nilpotent->element = U(sys, "1");
  CHECK(!reverify(bad));

  CHECK(!nilpotent_witness(U(sys, "X^2 - 1")).has_value());
}

TEST_CASE("X^2 is not semisimple, X^2 - 1 is") {
  ParamSystemPtr sys = ring({}, {"X"});

  Certificate c1 = is_semisimple_univariate(U(sys, "X^2"));
  CHECK(c1.verdict == Verdict::NotSemisimple);
  REQUIRE(c1.nilpotent.has_value());
  CHECK(c1.nilpotent->element == U(sys, "X"));
  CHECK(c1.nilpotent->power == 2);
  CHECK(reverify(c1));

  Certificate c2 = is_semisimple_univariate(U(sys, "X^2 - 1"));
  CHECK(c2.verdict == Verdict::Semisimple);
  REQUIRE(c2.nonzero.size() == 1);
  CHECK(reverify(c2));
}

TEST_CASE("X^2 - x is semisimple with the parameter monomial stripped") {
  ParamSystemPtr sys = ring({"x"}, {"X"});
  UniPoly f = U(sys, "X^2 - x");

  CHECK(resultant_uni(f, f.derivative()) == FieldElem(P(sys, "-4*x")));

  Certificate cert = is_semisimple_univariate(f);
  CHECK(cert.verdict == Verdict::Semisimple);
  REQUIRE(cert.nonzero.size() == 1);
  const NonzeroWitness& w = cert.nonzero[0];
  CHECK(w.quantity == P(sys, "-4*x"));
  REQUIRE(w.units.size() == 1);
  CHECK(w.units[0] == P(sys, "x"));
  CHECK(w.reduced == P(sys, "-4"));
  CHECK(w.value == Rational(-4));
  CHECK(reverify(cert));
}

TEST_CASE("field summand certificate splits off a reduced factor") {
  ParamSystemPtr sys = ring({}, {"X"});

  Certificate cert = field_summand_certificate(U(sys, "X^3 - X^2"));
  CHECK(cert.verdict == Verdict::ContainsFieldSummand);
  REQUIRE(cert.summand.has_value());
  const SummandWitness& s = *cert.summand;
  CHECK(s.part == U(sys, "X - 1"));
  CHECK(s.complement == U(sys, "X^2"));
  CHECK(s.idempotent == U(sys, "X^2"));
  CHECK(reverify(cert));

  Certificate bad = cert;
  std::swap(bad.summand->bezout_u, bad.summand->bezout_v);
  CHECK(!reverify(bad));
  bad = cert;
  bad.summand->idempotent = U(sys, "X");
  CHECK(!reverify(bad));
  bad = cert;
  bad.summand->part = U(sys, "X^2");
  bad.summand->complement = U(sys, "X - 1");
  CHECK(!reverify(bad));

  // squarefree modulus: the summand is everything, idempotent 1
  Certificate whole = field_summand_certificate(U(sys, "X^2 - 1"));
  CHECK(whole.verdict == Verdict::ContainsFieldSummand);
  CHECK(whole.summand->part == U(sys, "X^2 - 1"));
  CHECK(whole.summand->idempotent == U(sys, "1"));
  CHECK(reverify(whole));

  // no multiplicity-one factor anywhere
  Certificate none = field_summand_certificate(U(sys, "X^4 - 2*X^3 + X^2"));
  CHECK(none.verdict == Verdict::Inconclusive);
  CHECK(!none.summand.has_value());
}

TEST_CASE("trace form detects the dual numbers") {
  ParamSystemPtr sys = ring({}, {"X"});
  FDAlgebra dual = univariate_quotient(U(sys, "X^2"));

  // Gram matrix [[2, 0], [0, 0]]
  CHECK(dual.trace_mul(dual.product(0, 0)) == FieldElem::from_rational(sys, 2));
  CHECK(dual.trace_mul(dual.product(1, 1)).is_zero());

  Certificate cert = trace_form_semisimple(dual);
  CHECK(cert.verdict == Verdict::NotSemisimple);
  REQUIRE(cert.nilpotent_vec.has_value());
  CHECK(cert.nilpotent_vec->second == 2);
  CHECK(reverify(cert, dual));

  Certificate bad = cert;
  bad.nilpotent_vec->second = 3;
  CHECK(!reverify(bad, dual));
  bad = cert;
  bad.nilpotent_vec->first = dual.zero_vec();
  CHECK(!reverify(bad, dual));
}

TEST_CASE("trace form certifies split semisimple quotients") {
  ParamSystemPtr sys = ring({}, {"X"});
  FDAlgebra alg = univariate_quotient(U(sys, "X^2 - 1"));
  CHECK(alg.trace_mul(alg.product(1, 1)) == FieldElem::from_rational(sys, 2));

  Certificate cert = trace_form_semisimple(alg);
  CHECK(cert.verdict == Verdict::Semisimple);
  REQUIRE(cert.nonzero.size() == 1);
  CHECK(cert.nonzero[0].value == Rational(4));
  CHECK(reverify(cert, alg));

  CHECK_THROWS_AS(trace_form_semisimple(alg, 1), ValidationError);
}

TEST_CASE("both semisimplicity routes agree on small quotients") {
  ParamSystemPtr sys = ring({"x"}, {"X"});
  for (const char* text : {"X^2", "X^2 - 1", "X^2 - x", "X^3 - x*X", "X^3 - X^2"}) {
    UniPoly f = U(sys, text);
    Certificate via_res = is_semisimple_univariate(f);
    Certificate via_trace = trace_form_semisimple(univariate_quotient(f));
    CAPTURE(text);
    CHECK(via_res.verdict == via_trace.verdict);
  }
}

TEST_CASE("the pentagon quotient algebra is semisimple") {
  ReducedPresentation red = reduce(standard_model("cp2-bl2"));
  UniPoly q = red.quotient();

  Certificate cert = is_semisimple_univariate(q);
  CHECK(cert.verdict == Verdict::Semisimple);
  REQUIRE(cert.nonzero.size() == 1);
  CHECK(reverify(cert));

  // the witness point is the all-ones point, where the stripped monomial is 1,
  // so the value must equal the discriminant-scale resultant of the classical
  // specialization computed independently
  const NonzeroWitness& w = cert.nonzero[0];
  for (const auto& [name, v] : w.point) CHECK(v == 1);

  std::map<std::string, Rational> one{{"s", 1}, {"s_eps", 1}, {"s_delta", 1}};
  std::vector<Rational> c = specialize_all(q, one);
  ParamSystemPtr s0 = ring({}, {"X"});
  std::vector<FieldElem> fc;
  fc.reserve(c.size());
  for (const Rational& r : c) fc.push_back(FieldElem::from_rational(s0, r));
  UniPoly q1 = UniPoly::from_coeffs(s0, "X", std::move(fc));
  FieldElem r1 = resultant_uni(q1, q1.derivative());
  CHECK(FieldElem::from_rational(s0, w.value) == r1);

  Certificate via_trace = trace_form_semisimple(univariate_quotient(q));
  CHECK(via_trace.verdict == Verdict::Semisimple);
  CHECK(reverify(via_trace, univariate_quotient(q)));
}

TEST_CASE("substitution homomorphism check compares rewritten tables") {
  ParamSystemPtr src_sys = ring({"x", "y"}, {"X"});
  FDAlgebra src = univariate_quotient(U(src_sys, "X^2 - x"));

  ParamSystemPtr dst_sys = ring({"y"}, {"X"});
  FDAlgebra dst = univariate_quotient(U(dst_sys, "X^2 - 4*y^2"));
  FDAlgebra wrong = univariate_quotient(U(dst_sys, "X^2 - 5*y^2"));

  std::map<std::string, int> target{{"y", 2}};
  CHECK(check_substitution_homomorphism(src, "x", Rational(4), target, dst));
  CHECK(!check_substitution_homomorphism(src, "x", Rational(4), target, wrong));
  CHECK(!check_substitution_homomorphism(src, "x", Rational(5), target, dst));

  // the identity substitution is a no-op
  CHECK(check_substitution_homomorphism(src, "x", Rational(1), {{"x", 1}}, src));

  ParamSystemPtr big = ring({"y"}, {"X", "Z"});
  FDAlgebra three = univariate_quotient(U(big, "X^3 - 1"));
  CHECK_THROWS_AS(check_substitution_homomorphism(src, "x", Rational(1), target, three),
                  ValidationError);
}
