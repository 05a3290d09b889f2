#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhtoric/field_elem.hpp"

namespace qhtoric {

// Univariate polynomial over the fraction field of a coefficient system.
// The main variable is identified by name only; it may coincide with a ring
// variable of the system (then coefficients simply never use it).
class UniPoly {
 public:
  UniPoly(ParamSystemPtr sys, std::string var);
  static UniPoly zero(ParamSystemPtr sys, std::string var);
  static UniPoly one(ParamSystemPtr sys, std::string var);
  static UniPoly variable(ParamSystemPtr sys, std::string var);
  static UniPoly from_coeffs(ParamSystemPtr sys, std::string var, std::vector<FieldElem> coeffs);

  const ParamSystemPtr& system() const { return sys_; }
  const std::string& var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const FieldElem& lc() const;
  FieldElem coeff(int k) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const FieldElem& c) const;
  UniPoly shifted(int k) const;  // multiply by var^k, k >= 0
  UniPoly pow(long e) const;     // e >= 0

  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly derivative() const;
  UniPoly monic() const;

  // Polynomial value at a field element (the main variable is substituted).
  FieldElem eval(const FieldElem& point) const;

  // Numeric substitution applied to every coefficient; the main variable stays.
  UniPoly specialize(const std::map<std::string, Rational>& values) const;

  UniPoly map_onto(ParamSystemPtr dst) const;

  std::string str() const;

 private:
  ParamSystemPtr sys_;
  std::string var_;
  std::vector<FieldElem> c_;  // c_[k] multiplies var^k; empty or c_.back() != 0
  void trim();
};

// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);

// Monic gcd via a subresultant remainder sequence on cleared-denominator
// forms (controls coefficient growth; no fractions until the final scaling).
UniPoly gcd_uni(const UniPoly& f, const UniPoly& g);

// Extended Euclid over the coefficient field: returns (g, u, v) with
// u*f + v*g0 = g and g monic (or zero).
struct ExtGcd {
  UniPoly g, u, v;
};
ExtGcd ext_gcd(const UniPoly& f, const UniPoly& g);

// Resultant of f and g with respect to the main variable, computed as the
// determinant of the Sylvester matrix (rows of f first) by fraction-free
// elimination.  Exact, including sign.
FieldElem resultant_uni(const UniPoly& f, const UniPoly& g);

// Resultant together with cofactors u, v such that u*f + v*g = res,
// deg a u < deg g and deg v < deg f (both nonconstant inputs).
struct ResultantCert {
  FieldElem res;
  UniPoly u, v;
};
ResultantCert resultant_cofactors(const UniPoly& f, const UniPoly& g);

// Squarefree decomposition f = lc * prod factors[i].first ^ factors[i].second
// with monic pairwise-coprime squarefree factors, multiplicities increasing.
struct SquarefreeDecomposition {
  FieldElem unit;
  std::vector<std::pair<UniPoly, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const UniPoly& f);

// View a polynomial (nonnegative powers of var) as univariate in var over the
// same system; coefficients keep every other variable.
UniPoly as_unipoly(const MPoly& p, const std::string& var);

// Inverse of as_unipoly; requires polynomial coefficients and var in the system.
MPoly to_mpoly(const UniPoly& f);

// Full numeric specialization of the coefficients.
std::vector<Rational> specialize_all(const UniPoly& f,
                                     const std::map<std::string, Rational>& values);

}  // namespace qhtoric
