#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhtoric/models.hpp"
#include "qhtoric/mpoly.hpp"
#include "qhtoric/polytope.hpp"
#include "qhtoric/unipoly.hpp"

namespace qhtoric {

// A primitive pair of facets i < j: their normals do not span a cone of the
// normal fan.  w = e_i + e_j; J lists the facets of the minimal cone whose
// span contains w, and c the coordinates of w in that cone.  Invariants:
// J is disjoint from {i, j}, the c are strictly positive integers, and J is
// empty exactly when w = 0.
struct PrimitivePair {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec2Z w;
  std::vector<std::size_t> J;
  std::vector<Integer> c;
};

// The quantum product of the two facet classes of a primitive pair,
//
//   u_i * u_j = s^{s_exp} q^{q_exp} prod_m u_m^{rhs[m]},
//
// together with the d-vector it came from (d_k = 1 on {i, j}, -c on J) and
// the equivalent relation between the rescaled classes v_k = s^{-eta_k} q u_k,
// which is the coefficient-free monomial identity
//
//   v_i v_j = prod_m v_m^{rhs[m]}.
struct QuantumRelation {
  PrimitivePair pair;
  std::vector<Integer> d;
  SymExp s_exp;            // sum_k d_k eta_k, kept symbolic
  Rational s_exp_value;    // the same exponent with sizes substituted
  long q_exp = 0;          // -sum_k d_k
  std::vector<Integer> rhs;
};

// Everything the reduction consumes: one multiplicative relation per
// primitive pair (ascending in (i, j)) plus the two additive rows, which are
// the transposed coordinates of the facet normals.  v_exp records the
// rescaling exponents: v_k = s^{v_exp[k]} q u_k with v_exp[k] = -eta_k.
struct QHPresentation {
  MomentPolytope polytope;
  std::vector<QuantumRelation> relations;
  std::array<std::vector<Integer>, 2> additive;
  std::vector<SymExp> v_exp;
};

// Enumerates the primitive pairs of a smooth Fano polygon with at least four
// facets.  Triangles have no primitive pairs (their one primitive collection
// has three elements); they throw UnsupportedModelError pointing at the
// direct quotient that reduce() produces for them.
std::vector<PrimitivePair> primitive_sets(const MomentPolytope& p);

// Builds the quantum product for one primitive pair.  With nonminimal_d the
// d-vector is padded to a full two-cone (w = 0 uses the cone of facets 0, 1
// with zero coefficients; a ray uses its adjacent cone); the resulting
// relation is identical.
QuantumRelation mult_relation(const MomentPolytope& p, const PrimitivePair& pr,
                              bool nonminimal_d = false);

QHPresentation presentation(const MomentPolytope& p, bool nonminimal_d = false);

// v_facet = s^{s_exp} * prod_k v_k^{expo[k]} over surviving facets.  s_exp is
// zero except on the triangle route, where the facet classes differ by units.
struct MonomialBacksub {
  std::size_t facet = 0;
  SymExp s_exp;
  std::map<std::size_t, int> expo;
};

// How one additive row turned into a generator:
//   generator = unit_coef * s^{unit_exp} * (clear monomial) * row',
// where row' is the row after monomial back-substitution, written in the
// output variables.  clear maps variable name to the (possibly negative)
// exponent it was multiplied by.
struct RowReduction {
  std::size_t row = 0;
  Rational unit_coef{1};
  SymExp unit_exp;
  std::map<std::string, int> clear;
  MPoly generator;
};

// Final elimination of one output variable from the other row generator:
// var = expr (a Laurent monomial combination of the survivor), consumed
// generator rows[used], then the remaining generator was multiplied by the
// clear monomial and by sign.
struct ElimStep {
  std::string var;
  MPoly expr;
  std::size_t used = 0;
  std::map<std::string, int> clear;
  Rational sign{1};
};

// A reduced presentation: either a single univariate relation (the quotient
// is a polynomial algebra modulo one polynomial) or two generators in two
// variables when no variable admits a monomial elimination.  All polynomials
// live over sys, whose ring variables are vars and whose parameters carry
// their symbolic meanings as powers of s.  The whole output was multiplied
// by s^{-global_unit} (nonzero only when the exponent lattice of the
// parameters cannot absorb a common offset).
struct ReducedPresentation {
  enum class Kind { Univariate, BivariateIdeal };

  Kind kind = Kind::Univariate;
  ParamSystemPtr sys;
  std::vector<std::string> vars;
  std::vector<std::size_t> surviving_facets;
  std::vector<MPoly> generators;
  std::vector<MonomialBacksub> backsubs;
  std::vector<std::size_t> dependent;  // indices of relations that reduced to identities
  std::vector<RowReduction> rows;
  std::optional<ElimStep> elim;
  SymExp global_unit;

  // Univariate only: the generator as a univariate polynomial over the
  // parameter-only coefficient field.
  UniPoly quotient() const;
};

// Reduces a presentation to one or two generators in the surviving variables.
// The ToricModel overload reports in the model's conventions (variable names,
// rescaling, generator scaling); the MomentPolytope overload uses defaults
// (Z1, Z2, ..., monic generators, a derived parameter t = s^(1/N)).  Both
// handle triangles directly with the hard-coded one-variable quotient.
ReducedPresentation reduce(const ToricModel& m, bool nonminimal_d = false);
ReducedPresentation reduce(const MomentPolytope& p, bool nonminimal_d = false);
ReducedPresentation reduce(const QHPresentation& pres, const ReductionFrame& frame);

// Replays every input relation through the backsubs and checks it lands in
// the reduced ideal: multiplicative relations must cancel identically, the
// consumed row must reproduce its recorded generator, and the remaining
// content must be an exact multiple of the output generators.  Throws
// InternalError on any mismatch.  reduce() runs this before returning.
void verify_reduction(const QHPresentation& pres, const ReductionFrame& frame,
                      const ReducedPresentation& red);

// The monomial in sys's parameters whose combined meaning equals h exactly;
// throws ValidationError when h is not an integer combination of the
// parameter meanings.
MPoly unit_monomial(const ParamSystemPtr& sys, const SymExp& h);

}  // namespace qhtoric
