#include "qhtoric/blowup.hpp"

#include <string>

#include "doctest.h"
#include "qhtoric/errors.hpp"
#include "support.hpp"

using namespace qhtoric;
using qht::P;

TEST_CASE("blow-up algebra construction") {
  CHECK_THROWS_AS(blowup_algebra(1), ValidationError);
  CHECK_THROWS_AS(blowup_algebra(0), ValidationError);
  CHECK_THROWS_AS(blowup_algebra(-3), ValidationError);

  BlowupAlgebra alg = blowup_algebra(2);
  CHECK(alg.quotient == as_unipoly(P(alg.sys, "A^3 - z*A^2"), "A"));
  CHECK(alg.b_elem == as_unipoly(P(alg.sys, "z*A - A^2"), "A"));
  CHECK(alg.sys->var(0).meaning.has_value());

  BlowupAlgebra w = blowup_algebra(4, "w");
  CHECK(w.quotient == as_unipoly(P(w.sys, "A^5 - w*A^2"), "A"));
  CHECK(w.b_elem == as_unipoly(P(w.sys, "w*A - A^4"), "A"));
}

TEST_CASE("exceptional-class products hold and detect corruption") {
  for (long n = 2; n <= 5; ++n) {
    BlowupAlgebra alg = blowup_algebra(n);
    CHECK(verify_blowup_products(alg));

    BlowupAlgebra bad = alg;
    bad.b_elem = -bad.b_elem;  // wrong sign on the exceptional class
    CHECK_FALSE(verify_blowup_products(bad));

    BlowupAlgebra bad2 = alg;
    bad2.b_elem = bad2.b_elem + UniPoly::one(alg.sys, "A");
    CHECK_FALSE(verify_blowup_products(bad2));
  }
}

TEST_CASE("small cases pin the summand factorization") {
  {
    BlowupAlgebra alg = blowup_algebra(2);
    BlowupReport rep = analyze_blowup(alg);
    REQUIRE(rep.field_summand.summand.has_value());
    CHECK(rep.field_summand.summand->part == as_unipoly(P(alg.sys, "A - z"), "A"));
    CHECK(rep.field_summand.summand->complement == as_unipoly(P(alg.sys, "A^2"), "A"));
    REQUIRE(rep.nilpotency.nilpotent.has_value());
    // the monic square-zero witness is -B = A^2 - z A
    CHECK(rep.nilpotency.nilpotent->element == -alg.b_elem);
    CHECK(rep.nilpotency.nilpotent->power == 2);
  }
  {
    BlowupAlgebra alg = blowup_algebra(3);
    BlowupReport rep = analyze_blowup(alg);
    REQUIRE(rep.field_summand.summand.has_value());
    CHECK(rep.field_summand.summand->part == as_unipoly(P(alg.sys, "A^2 - z"), "A"));
    CHECK(rep.field_summand.summand->complement == as_unipoly(P(alg.sys, "A^2"), "A"));
    REQUIRE(rep.nilpotency.nilpotent.has_value());
    CHECK(rep.nilpotency.nilpotent->element == -alg.b_elem);
    CHECK(rep.nilpotency.nilpotent->power == 2);
  }
}

TEST_CASE("full analysis across dimensions") {
  for (long n = 2; n <= 8; ++n) {
    CAPTURE(n);
    BlowupAlgebra alg = blowup_algebra(n);
    BlowupReport rep = analyze_blowup(alg);

    CHECK(rep.all_ok());
    CHECK(rep.nilpotency.verdict == Verdict::NotSemisimple);
    CHECK(rep.field_summand.verdict == Verdict::ContainsFieldSummand);
    CHECK(rep.products_ok);
    CHECK(rep.b_squares_to_zero);
    CHECK(rep.b_annihilates_summand);
    CHECK(rep.lifts_divisible);
    CHECK(rep.idempotent_proper);

    CHECK(reverify(rep.nilpotency));
    CHECK(reverify(rep.field_summand));
  }
}
