#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhtoric/unipoly.hpp"

namespace qhtoric {

// Commutative algebra of finite dimension over the coefficient field, given
// by structure constants: table[i][j] holds the coordinates of the product
// of basis elements i and j in the basis itself.  Commutativity and the unit
// law are checked on construction, associativity too while the dimension
// keeps the n^4 sweep cheap (companion and tensor constructions are
// associative by design; the sweep is a net for hand-built tables).
class FDAlgebra {
 public:
  static constexpr std::size_t kAssocCheckBound = 8;

  FDAlgebra(ParamSystemPtr sys, std::vector<std::string> basis,
            std::vector<std::vector<std::vector<FieldElem>>> table,
            std::vector<FieldElem> unity);

  const ParamSystemPtr& system() const { return sys_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<FieldElem>& product(std::size_t i, std::size_t j) const;
  const std::vector<FieldElem>& unity() const { return unity_; }

  std::vector<FieldElem> zero_vec() const;
  std::vector<FieldElem> basis_vec(std::size_t i) const;
  bool vec_is_zero(const std::vector<FieldElem>& a) const;
  std::vector<FieldElem> mul(const std::vector<FieldElem>& a,
                             const std::vector<FieldElem>& b) const;
  std::vector<FieldElem> power(const std::vector<FieldElem>& a, long e) const;
  // Trace of the multiplication-by-a operator.
  FieldElem trace_mul(const std::vector<FieldElem>& a) const;

 private:
  ParamSystemPtr sys_;
  std::vector<std::string> basis_;
  std::vector<std::vector<std::vector<FieldElem>>> table_;
  std::vector<FieldElem> unity_;
  std::vector<FieldElem> basis_trace_;
};

// Quotient by a univariate polynomial of degree n >= 1, on the monomial
// basis 1, X, ..., X^(n-1); multiplication reduces modulo f.
FDAlgebra univariate_quotient(const UniPoly& f);

enum class Verdict { Semisimple, NotSemisimple, ContainsFieldSummand, RadicalIdeal, Inconclusive };
const char* verdict_name(Verdict v);

// A point of the fixed evaluation schedule and the nonzero value found there.
struct EvalPoint {
  std::map<std::string, Rational> point;
  Rational value;
};

// One-sided zero test: tries the all-ones point, then for each prime p of a
// fixed list the point assigning 1 + (j+1)/p to the j-th occurring variable.
// Candidates where some avoid polynomial vanishes are skipped (pole loci,
// or parameter regimes a caller has declared out of scope).  Returns the
// first point where h is nonzero; nullopt proves nothing.
std::optional<EvalPoint> nonvanishing_test(const MPoly& h,
                                           const std::vector<MPoly>& avoid = {});

// Certifies quantity != 0 in the coefficient field:
//   quantity == reduced * prod units[i]^mult[i]
// where every unit is a parameter monomial or a polynomial the active regime
// declares invertible, and reduced takes the nonzero value at the point.
struct NonzeroWitness {
  std::string label;
  MPoly quantity;
  std::vector<MPoly> units;
  std::vector<long> mult;
  MPoly reduced;
  std::map<std::string, Rational> point;
  Rational value;
};

// element != 0 and element^power == 0 modulo modulus, with power minimal.
struct NilpotentWitness {
  UniPoly modulus, element;
  int power = 0;
};

// Splitting K[X]/(modulus) into K[X]/(complement) + K[X]/(part):
// modulus == part * complement, the factors are coprime (Bezout pair), part
// is squarefree of degree >= 1 (Bezout pair against its derivative), and
// idempotent == bezout_v * complement mod modulus projects onto the part
// component.
struct SummandWitness {
  UniPoly modulus, part, complement;
  UniPoly bezout_u, bezout_v;
  UniPoly sf_u, sf_v;
  UniPoly idempotent;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<NonzeroWitness> nonzero;
  std::optional<NilpotentWitness> nilpotent;
  std::optional<SummandWitness> summand;
  // Coordinate witnesses in an ambient algebra (trace-form route, tensors):
  // a nilpotent vector with its vanishing power, and a proper idempotent.
  std::optional<std::pair<std::vector<FieldElem>, int>> nilpotent_vec;
  std::optional<std::vector<FieldElem>> idempotent_vec;
  // Quantities whose nonvanishing the point schedule failed to settle.
  std::vector<MPoly> unresolved;
};

// Independent witness re-check using only ring arithmetic and evaluation.
// The overload with an algebra also re-checks the coordinate witnesses.
bool reverify(const Certificate& cert);
bool reverify(const Certificate& cert, const FDAlgebra& alg);

// Strips parameter-monomial content and declared-invertible factors off q,
// then searches the schedule for a nonzero point of what remains.
std::optional<NonzeroWitness> certify_nonzero(const std::string& label, const MPoly& q,
                                              const std::vector<MPoly>& assumed_units = {},
                                              const std::vector<MPoly>& avoid = {});

// Squarefree part of f together with the least power sending it to zero in
// K[X]/(f); nullopt when f is squarefree.
std::optional<NilpotentWitness> nilpotent_witness(const UniPoly& f);

// Resultant route: computes Res(f, f').  Nonvanishing certified -> Semisimple;
// identically zero -> NotSemisimple with a nilpotent witness; otherwise
// Inconclusive carrying the unresolved resultant.
Certificate is_semisimple_univariate(const UniPoly& f);

// Squarefree-decomposition route: a multiplicity-one part of positive degree
// splits off a semisimple (hence field-containing) summand.  Absence of such
// a part is Inconclusive, not a refutation.
Certificate field_summand_certificate(const UniPoly& f);

// Trace-form route: the algebra is semisimple iff det(T) != 0 for
// T(i,j) = trace of multiplication by e_i e_j.  A vanishing determinant
// yields a kernel vector, which is nilpotent and is returned as the witness.
Certificate trace_form_semisimple(const FDAlgebra& alg, std::size_t dim_bound = 12);

// True iff rewriting var -> coef * target monomial in every structure
// constant of src yields exactly the table of dst (unity included).  The
// identity rewriting (coef 1, target {var: 1}) compares the tables as they
// are.  Dimension mismatch is a usage error.
bool check_substitution_homomorphism(const FDAlgebra& src, const std::string& var,
                                     const Rational& coef,
                                     const std::map<std::string, int>& target,
                                     const FDAlgebra& dst);

}  // namespace qhtoric
