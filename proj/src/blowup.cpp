#include "qhtoric/blowup.hpp"

#include "qhtoric/errors.hpp"
#include "qhtoric/mpoly.hpp"

namespace qhtoric {

BlowupAlgebra blowup_algebra(long n, const std::string& size_param) {
  if (n < 2) throw ValidationError("blowup_algebra: need n >= 2, got " + std::to_string(n));
  ParamSystem::Builder b;
  b.add_param(size_param, -SymExp::param("delta"));
  b.add_ring_var("A");
  ParamSystemPtr sys = b.build();

  MPoly A = MPoly::variable(sys, "A");
  MPoly z = MPoly::variable(sys, size_param);
  MPoly f = A.pow(n + 1) - z * A.pow(2);  // = A^2 (A^{n-1} - z)
  MPoly bb = z * A - A.pow(n);
  return {n, sys, as_unipoly(f, "A"), as_unipoly(A, "A"), as_unipoly(bb, "A")};
}

namespace {

UniPoly reduce_mod(const UniPoly& p, const UniPoly& f) { return divrem(p, f).second; }

UniPoly upow(const UniPoly& a, long e, const UniPoly& f) {
  UniPoly r = UniPoly::one(a.system(), a.var());
  for (long k = 0; k < e; ++k) r = reduce_mod(r * a, f);
  return r;
}

}  // namespace

bool verify_blowup_products(const BlowupAlgebra& alg) {
  const UniPoly& f = alg.quotient;
  const UniPoly& A = alg.a_elem;
  UniPoly z = UniPoly::from_coeffs(
      alg.sys, A.var(), {FieldElem(MPoly::variable(alg.sys, alg.sys->var(0).name))});

  UniPoly top = reduce_mod(A * z - alg.b_elem, f);  // -B + A z
  for (long i = 1; i < alg.n; ++i)
    if (reduce_mod(upow(A, i, f) * upow(A, alg.n - i, f), f) != top) return false;

  for (long i = 1; i < alg.n; ++i)
    for (long j = i; i + j < alg.n; ++j)
      if (upow(A, i, f) * upow(A, j, f) != upow(A, i + j, f)) return false;

  return reduce_mod(A * alg.b_elem, f).is_zero();
}

BlowupReport analyze_blowup(const BlowupAlgebra& alg) {
  const UniPoly& f = alg.quotient;

  BlowupReport rep{is_semisimple_univariate(f), field_summand_certificate(f)};
  rep.products_ok = verify_blowup_products(alg);
  rep.b_squares_to_zero = reduce_mod(alg.b_elem * alg.b_elem, f).is_zero();

  if (rep.field_summand.summand) {
    const SummandWitness& s = *rep.field_summand.summand;
    const UniPoly& e = s.idempotent;
    UniPoly one = UniPoly::one(alg.sys, f.var());

    rep.b_annihilates_summand = reduce_mod(alg.b_elem * e, f).is_zero();
    rep.idempotent_proper =
        !e.is_zero() && e != one && reduce_mod(e * e - e, f).is_zero();

    // every image e A^k of the summand projection is a polynomial multiple
    // of A^2, the content of the non-reduced component
    rep.lifts_divisible = true;
    for (long k = 0; k <= alg.n; ++k) {
      UniPoly lift = reduce_mod(e * upow(alg.a_elem, k, f), f);
      if (!lift.coeff(0).is_zero() || !lift.coeff(1).is_zero()) rep.lifts_divisible = false;
    }
  }
  return rep;
}

}  // namespace qhtoric
