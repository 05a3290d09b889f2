// Randomized cross-checks over the univariate toolkit and the certificate
// layer.  Everything here is exact: the suites draw small random inputs and
// assert identities that must hold verbatim, so a single miscomputed
// coefficient anywhere in gcd / resultant / squarefree / trace-form code
// shows up as a hard failure.  Seeds are fixed; runs are reproducible.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qhtoric/products.hpp"
#include "qhtoric/ssalg.hpp"
#include "qhtoric/unipoly.hpp"
#include "support.hpp"

using namespace qhtoric;
using qht::P;

namespace {

ParamSystemPtr xring() {
  ParamSystem::Builder b;
  b.add_param("x");
  b.add_ring_var("X");
  return b.build();
}

// Random polynomial in X of degree in [lo, hi] with coefficients in [-4, 4],
// occasionally with a linear x part when with_param is set.  Never zero: a
// vanishing leading coefficient is bumped to 1.
UniPoly rand_poly(std::mt19937_64& rng, const ParamSystemPtr& sys, int lo, int hi,
                  bool with_param) {
  std::uniform_int_distribution<int> degd(lo, hi), coef(-4, 4), roll(0, 3);
  int d = degd(rng);
  std::vector<FieldElem> cs;
  cs.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    MPoly c = MPoly::constant(sys, Rational(coef(rng)));
    if (with_param && roll(rng) == 0)
      c = c + MPoly::constant(sys, Rational(coef(rng))) * MPoly::variable(sys, "x");
    cs.push_back(FieldElem(std::move(c)));
  }
  if (cs.back().is_zero()) cs.back() = FieldElem::one(sys);
  return UniPoly::from_coeffs(sys, "X", std::move(cs));
}

UniPoly rem(const UniPoly& f, const UniPoly& g) { return divrem(f, g).second; }

}  // namespace

TEST_CASE("gcd divides both inputs and matches the extended form") {
  std::mt19937_64 rng(0x51ab1e5);
  ParamSystemPtr sys = xring();
  std::uniform_int_distribution<int> plant(0, 1);

  for (int it = 0; it < 400; ++it) {
    bool param = it % 4 == 0;
    UniPoly f = rand_poly(rng, sys, 0, 4, param);
    UniPoly g = rand_poly(rng, sys, 0, 4, param);
    UniPoly c = UniPoly::one(sys, "X");
    if (plant(rng) == 1) {
      c = rand_poly(rng, sys, 1, 2, param);
      f = f * c;
      g = g * c;
    }

    UniPoly h = gcd_uni(f, g);
    REQUIRE(!h.is_zero());
    CHECK(h.lc() == FieldElem::one(sys));
    CHECK(rem(f, h).is_zero());
    CHECK(rem(g, h).is_zero());
    CHECK(rem(h, c).is_zero());  // the planted common factor must divide the gcd

    ExtGcd e = ext_gcd(f, g);
    CHECK(e.g == h);
    CHECK(e.u * f + e.v * g == h);
  }
}

TEST_CASE("resultant vanishes exactly when a common factor exists") {
  std::mt19937_64 rng(0xbadd1ce);
  ParamSystemPtr sys = xring();

  for (int it = 0; it < 300; ++it) {
    bool param = it % 5 == 0;
    UniPoly f = rand_poly(rng, sys, 1, 4, param);
    UniPoly g = rand_poly(rng, sys, 1, 4, param);
    if (!param && it % 3 == 0) {
      UniPoly c = rand_poly(rng, sys, 1, 2, false);
      f = f * c;
      g = g * c;
    }

    FieldElem r = resultant_uni(f, g);
    CHECK(r.is_zero() == (gcd_uni(f, g).degree() >= 1));

    if (!r.is_zero()) {
      ResultantCert rc = resultant_cofactors(f, g);
      CHECK(rc.res == r);
      CHECK(rc.u * f + rc.v * g == UniPoly::one(sys, "X") * r);
      CHECK(rc.u.degree() < g.degree());
      CHECK(rc.v.degree() < f.degree());
    }

    // multiplicativity in the first argument, on fresh small inputs
    UniPoly a = rand_poly(rng, sys, 1, 2, param);
    UniPoly b = rand_poly(rng, sys, 1, 2, param);
    UniPoly h = rand_poly(rng, sys, 1, 2, param);
    CHECK(resultant_uni(a * b, h) == resultant_uni(a, h) * resultant_uni(b, h));
  }
}

TEST_CASE("squarefree decomposition reconstructs its input") {
  std::mt19937_64 rng(0x5f5f5f);
  ParamSystemPtr sys = xring();
  std::uniform_int_distribution<int> multd(1, 3);

  for (int it = 0; it < 300; ++it) {
    bool param = it % 6 == 0;
    int parts = 1 + it % 3;
    UniPoly f = UniPoly::one(sys, "X");
    for (int i = 0; i < parts; ++i) f = f * rand_poly(rng, sys, 1, 2, param).pow(multd(rng));

    SquarefreeDecomposition sf = squarefree_decomposition(f);
    UniPoly back = UniPoly::one(sys, "X") * sf.unit;
    int prev = 0;
    for (const auto& [p, m] : sf.factors) {
      CHECK(m > prev);
      prev = m;
      CHECK(p.lc() == FieldElem::one(sys));
      CHECK(gcd_uni(p, p.derivative()).degree() == 0);
      back = back * p.pow(m);
    }
    for (std::size_t i = 0; i < sf.factors.size(); ++i)
      for (std::size_t j = i + 1; j < sf.factors.size(); ++j)
        CHECK(gcd_uni(sf.factors[i].first, sf.factors[j].first).degree() == 0);
    CHECK(back == f);
  }
}

TEST_CASE("every emitted certificate re-verifies") {
  std::mt19937_64 rng(0xce27f);
  ParamSystemPtr sys = xring();
  int emitted = 0, passed = 0;

  for (int it = 0; it < 200; ++it) {
    bool param = it % 4 == 0;
    UniPoly f = rand_poly(rng, sys, 1, 6, param);

    Certificate ss = is_semisimple_univariate(f);
    ++emitted;
    passed += reverify(ss) ? 1 : 0;
    if (!param) CHECK(ss.verdict != Verdict::Inconclusive);

    Certificate fs = field_summand_certificate(f);
    ++emitted;
    passed += reverify(fs) ? 1 : 0;

    FDAlgebra alg = univariate_quotient(f);
    Certificate tr = trace_form_semisimple(alg);
    ++emitted;
    passed += reverify(tr, alg) ? 1 : 0;
  }
  CHECK(emitted == 600);
  CHECK(passed == emitted);
}

TEST_CASE("resultant and trace-form routes agree on small quotients") {
  std::mt19937_64 rng(0x2007a);
  ParamSystemPtr sys = xring();

  for (int it = 0; it < 120; ++it) {
    bool param = it % 2 == 0;
    UniPoly f = rand_poly(rng, sys, 2, param ? 5 : 8, param);

    Certificate a = is_semisimple_univariate(f);
    FDAlgebra alg = univariate_quotient(f);
    Certificate b = trace_form_semisimple(alg);

    REQUIRE(a.verdict != Verdict::Inconclusive);
    REQUIRE(b.verdict != Verdict::Inconclusive);
    CHECK(a.verdict == b.verdict);
    CHECK(reverify(a));
    CHECK(reverify(b, alg));
  }
}

TEST_CASE("kunneth verdicts on certified factors") {
  std::mt19937_64 rng(0x7e45b);
  ParamSystemPtr xs = xring();
  ParamSystem::Builder yb;
  yb.add_ring_var("Y");
  ParamSystemPtr ys = yb.build();
  std::uniform_int_distribution<int> cd(1, 9), sign(0, 1);

  for (int it = 0; it < 30; ++it) {
    Rational c1(Rational(cd(rng)) * (sign(rng) ? 1 : -1));
    Rational c2(Rational(cd(rng)) * (sign(rng) ? 1 : -1));

    UniPoly f = UniPoly::from_coeffs(xs, "X", {FieldElem::from_rational(xs, -c1),
                                               FieldElem::zero(xs), FieldElem::one(xs)});
    UniPoly g = UniPoly::from_coeffs(ys, "Y", {FieldElem::from_rational(ys, -c2),
                                               FieldElem::zero(ys), FieldElem::one(ys)});
    Certificate ca = is_semisimple_univariate(f);
    Certificate cb = is_semisimple_univariate(g);
    REQUIRE(ca.verdict == Verdict::Semisimple);
    REQUIRE(cb.verdict == Verdict::Semisimple);

    KunnethReport kr = kunneth_check(univariate_quotient(f), ca, univariate_quotient(g), cb);
    CHECK(kr.certificate.verdict == Verdict::Semisimple);
    CHECK(kr.consistent);
    CHECK(reverify(kr.certificate, kr.product));

    // a nilpotent partner poisons the product: (Y - c)^2 has a double root
    UniPoly lin = UniPoly::variable(ys, "Y") - UniPoly::one(ys, "Y") *
                                                   FieldElem::from_rational(ys, Rational(cd(rng)));
    UniPoly n = lin * lin;
    Certificate cn = is_semisimple_univariate(n);
    REQUIRE(cn.verdict == Verdict::NotSemisimple);

    KunnethReport k2 = kunneth_check(univariate_quotient(f), ca, univariate_quotient(n), cn);
    CHECK(k2.certificate.verdict == Verdict::NotSemisimple);
    CHECK(k2.consistent);
    CHECK(reverify(k2.certificate, k2.product));
  }
}

TEST_CASE("bezout idempotents split coprime moduli") {
  std::mt19937_64 rng(0xc127d);
  ParamSystemPtr sys = xring();
  UniPoly one = UniPoly::one(sys, "X");
  int done = 0;

  for (int it = 0; it < 150; ++it) {
    bool param = it % 5 == 0;
    UniPoly p = rand_poly(rng, sys, 1, 3, param);
    UniPoly q = rand_poly(rng, sys, 1, 3, param);
    if (gcd_uni(p, q).degree() != 0) continue;
    ++done;

    UniPoly f = p * q;
    ExtGcd e = ext_gcd(p, q);
    REQUIRE(e.g == one);

    UniPoly e1 = rem(e.v * q, f);
    UniPoly e2 = rem(e.u * p, f);
    CHECK(e1 + e2 == one);
    CHECK(rem(e1 * e2, f).is_zero());
    CHECK(rem(e1 * e1, f) == e1);
    CHECK(rem(e2 * e2, f) == e2);
    // e1 is the projection onto the p-component
    CHECK(rem(e1, q).is_zero());
    CHECK(rem(e1 - one, p).is_zero());
  }
  CHECK(done >= 120);
}
