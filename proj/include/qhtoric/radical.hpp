#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhtoric/batyrev.hpp"
#include "qhtoric/mpoly.hpp"
#include "qhtoric/ssalg.hpp"
#include "qhtoric/unipoly.hpp"

namespace qhtoric {

// A univariate element of a two-generator ideal together with the
// combination proving membership: to_mpoly(poly) == c1 * g1 + c2 * g2.
struct MembershipCert {
  UniPoly poly;
  MPoly c1, c2;
};

// Checks the combination identity and that poly is a nonconstant polynomial
// mentioning no ring variable besides its own.  Nothing is trusted: a failed
// check returns false rather than throwing.
bool verify_membership(const MembershipCert& m, const MPoly& g1, const MPoly& g2);

// Sylvester resultant of the two generators in the eliminated ring variable,
// with cofactors over the full ring.  A vanishing resultant means the
// generators share a factor, which is reported in common instead.
struct EliminationResult {
  UniPoly poly;
  MPoly c1, c2;
  std::optional<UniPoly> common;
};

// Requires a system with exactly two ring variables, generators polynomial
// in both of them, and at least one generator of positive degree in the
// eliminated one.  The cofactor identity is rechecked before returning.
EliminationResult elimination_resultant(const MPoly& g1, const MPoly& g2,
                                        const std::string& eliminate);

// Throws when the elimination degenerated (shared factor).
MembershipCert to_membership(const EliminationResult& e);

// Radicality of (g1, g2) from one squarefree univariate member per ring
// variable: the quotient embeds into a product of separable field extensions
// and every quotient of that is reduced.  Monomial factors in the ring
// variables are units of the Laurent coefficient ring and are stripped
// before the squarefree test; assumed_units lists parameter combinations
// that are invertible in the regime under consideration and may be divided
// out of the resultants before the nonvanishing search.  Returns RadicalIdeal
// with one nonzero witness per member, or Inconclusive.
Certificate seidenberg_radical_check(const MPoly& g1, const MPoly& g2,
                                     const MembershipCert& in_first,
                                     const MembershipCert& in_second,
                                     const std::vector<MPoly>& assumed_units = {});

// The three loci of the size parameters that need separate treatment for the
// three-blow-up ideal: no constraint, y = z, and x y z = 1.
enum class ParamRegime { Generic, EqualYZ, ProductOne };

const char* regime_name(ParamRegime r);

// "" -> Generic, "y=z" -> EqualYZ, "xyz=1" -> ProductOne.
ParamRegime parse_regime(const std::string& text);

// The three-blow-up ideal specialized to a regime, with one univariate
// member per variable obtained by explicit elimination chains.  Each member
// factors as split * core with the core separable on the regime's locus;
// regime_units lists the parameter combinations invertible there.
struct CaseMembers {
  ParamRegime regime = ParamRegime::Generic;
  ParamSystemPtr sys;
  MPoly g1, g2;
  MembershipCert in_first, in_second;
  UniPoly split_first, core_first;
  UniPoly split_second, core_second;
  std::vector<MPoly> regime_units;
};

// Specializes the reduced two-generator presentation (over parameters named
// x, y, z) to the regime and runs the elimination chains.  Every intermediate
// identity is rechecked; shape mismatches throw ValidationError.
CaseMembers derive_case_members(const ReducedPresentation& red, ParamRegime regime);

// RadicalIdeal certificate from the split/core data: reverifies the
// memberships and the factorizations, then certifies the core and split
// resultants nonzero after dividing out the regime units.
Certificate radical_case_certificate(const CaseMembers& cm);

}  // namespace qhtoric
