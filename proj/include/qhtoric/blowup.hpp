#pragma once

#include <string>

#include "qhtoric/param_system.hpp"
#include "qhtoric/ssalg.hpp"
#include "qhtoric/unipoly.hpp"

namespace qhtoric {

// The one-point blow-up quotient K(z)[A] / (A^2 (A^{n-1} - z)) of a
// 2n-dimensional base, with its two distinguished classes: the generator A
// and B = A z - A^n, the image of the exceptional-fiber class.  z is a free
// size parameter standing for the (-delta)-th power of the series variable.
struct BlowupAlgebra {
  long n;
  ParamSystemPtr sys;
  UniPoly quotient;  // A^{n+1} - z A^2
  UniPoly a_elem;
  UniPoly b_elem;
};

// n >= 2 required.
BlowupAlgebra blowup_algebra(long n, const std::string& size_param = "z");

// The defining product identities, all checked by exact reduction modulo the
// quotient: A^i A^{n-i} = -B + A z for 0 < i < n, untouched free products
// A^i A^j = A^{i+j} for i + j < n, and A B = 0.  Every one of these lives in
// the single graded component the two classes generate, so homogeneity is
// exactly the statement that the identities close polynomially.
bool verify_blowup_products(const BlowupAlgebra& alg);

// The structural verdicts with their supporting exact checks: the algebra is
// not semisimple (B is a square-zero witness) yet splits off the reduced
// component cut out by A^{n-1} - z, whose idempotent annihilates B and whose
// elements all lift to polynomials divisible by A^2.
struct BlowupReport {
  Certificate nilpotency;
  Certificate field_summand;
  bool products_ok = false;
  bool b_squares_to_zero = false;
  bool b_annihilates_summand = false;
  bool lifts_divisible = false;
  bool idempotent_proper = false;

  bool all_ok() const {
    return nilpotency.verdict == Verdict::NotSemisimple &&
           field_summand.verdict == Verdict::ContainsFieldSummand && products_ok &&
           b_squares_to_zero && b_annihilates_summand && lifts_divisible && idempotent_proper;
  }
};

BlowupReport analyze_blowup(const BlowupAlgebra& alg);

}  // namespace qhtoric
