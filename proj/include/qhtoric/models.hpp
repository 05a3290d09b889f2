#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhtoric/param_system.hpp"
#include "qhtoric/polytope.hpp"

namespace qhtoric {

// How each additive-row generator is scaled after clearing: either by the
// unit making it monic, or by the unit making its constant term exactly -1
// (a no-op when there is no constant term, or when the relevant coefficient
// is not a single power of the series variable).
enum class GenScale { Monic, ConstantMinusOne };

// Output conventions for reducing a presentation.
//
// The reduction works with the rescaled facet classes v_i = s^{sigma_i} Z_i;
// sigma is per facet (empty means sigma_i = -support_i, i.e. Z_i = q u_i).
// Surviving facets get survivor_names in ascending facet order (empty means
// Z1, Z2, ... by facet number).  out_params declares the coefficient
// variables of the output ring with their symbolic meanings; when empty a
// single parameter t = s^(1/N) is derived from the exponents that occur.
struct ReductionFrame {
  std::vector<SymExp> sigma;
  std::vector<std::string> survivor_names;
  GenScale scale = GenScale::Monic;
  std::vector<VarDecl> out_params;
};

// A named moment polytope with symbolic size parameters and the presentation
// conventions its reduced form is reported in.
struct ToricModel {
  std::string name;
  MomentPolytope polytope;
  std::map<std::string, Rational> params;
  ReductionFrame frame;
};

// Factories for the five standard families.  Missing parameters take the
// documented defaults; unknown names or violated size constraints throw
// ValidationError.
//
//   cp2      lambda > 0                      (default lambda = 1)
//   cp2-bl1  0 < rho < lambda                (1, 1/2)
//   cp2-bl2  eps, delta in (0,1), eps+delta > 1   (2/3, 2/3)
//   cp2-bl3  0 < alpha < beta < 1, alpha < gamma < 1, beta+gamma > 1
//                                            (1/4, 2/3, 2/3)
//   s2xs2    a > 0, b > 0                    (1, 1)
ToricModel standard_model(const std::string& name,
                          std::map<std::string, Rational> params = {});
ToricModel standard_model(FanoTag tag, std::map<std::string, Rational> params = {});

std::vector<std::string> standard_model_names();

}  // namespace qhtoric
