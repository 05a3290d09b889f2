#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhtoric/param_system.hpp"
#include "qhtoric/rational.hpp"

namespace qhtoric {

using ExpVec = std::vector<int>;

// Graded lexicographic order on exponent vectors (total degree first, then
// lexicographic with the earlier variable weighing more).  Works for Laurent
// exponents too: it is translation invariant, so leading terms behave under
// multiplication by monomials.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate Laurent polynomial with rational coefficients over a
// fixed ParamSystem.  The term map never stores zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexLess>;

  explicit MPoly(ParamSystemPtr sys);
  static MPoly zero(ParamSystemPtr sys) { return MPoly(std::move(sys)); }
  static MPoly constant(ParamSystemPtr sys, const Rational& c);
  static MPoly variable(ParamSystemPtr sys, const std::string& name, int exp = 1);
  static MPoly monomial(ParamSystemPtr sys, const Rational& coef,
                        const std::map<std::string, int>& exps);
  static MPoly monomial(ParamSystemPtr sys, const Rational& coef, ExpVec exps);

  const ParamSystemPtr& system() const { return sys_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return t_.size() == 1; }
  std::size_t term_count() const { return t_.size(); }

  // Grlex-leading term (largest).  Requires nonzero.
  const std::pair<const ExpVec, Rational>& leading() const;
  Rational coeff(const ExpVec& e) const;
  Rational constant_term() const;

  // Degree bookkeeping.
  int deg_in(std::size_t var) const;      // max exponent; 0 for the zero polynomial
  int min_deg_in(std::size_t var) const;  // min exponent; 0 for the zero polynomial
  bool depends_on(std::size_t var) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator*(const Rational& c) const;
  MPoly pow(long e) const;  // e < 0 only for monomials

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(std::size_t var) const;

  // Full numeric evaluation; every variable needs a value, and values must be
  // nonzero wherever a negative exponent occurs.
  Rational eval(const std::map<std::string, Rational>& values) const;

  // Numeric substitution of a subset of variables; the rest stay symbolic.
  MPoly specialize(const std::map<std::string, Rational>& values) const;

  // Replace var by coef * (monomial in the other variables); coef must be
  // nonzero when var occurs with a negative exponent.
  MPoly substitute_monomial(std::size_t var, const Rational& coef,
                            const std::map<std::size_t, int>& target) const;

  // Apply every relation declared in the system, then drop the substituted
  // variables; returns the polynomial over the pruned system.
  MPoly apply_relations() const;

  // Re-express over another system; variables are matched by name, and any
  // variable of this system that is missing from dst must not occur.
  MPoly map_onto(ParamSystemPtr dst) const;

  // Exact division; throws InternalError when the division is not exact.
  MPoly divexact(const MPoly& d) const;

  // gcd(|coefficients|) as a positive rational (0 for the zero polynomial).
  Rational content_rational() const;
  // Componentwise minimum of exponents (the monomial unit dividing every term).
  ExpVec monomial_content() const;

  // Canonical associate: content 1, no monomial content, positive leading
  // coefficient.  Zero stays zero.
  MPoly normalized() const;

  std::string str() const;
  static MPoly parse(ParamSystemPtr sys, const std::string& text);
  // Names appearing as variables in the given polynomial text, in order of
  // first occurrence (used to build a system before parsing).
  static std::vector<std::string> scan_names(const std::string& text);

 private:
  ParamSystemPtr sys_;
  TermMap t_;
  void add_term(const ExpVec& e, const Rational& c);
  void check_same(const MPoly& o) const;
};

// Greatest common divisor up to units, canonically normalized (see
// MPoly::normalized).  Primitive remainder sequences, recursing on variables.
MPoly gcd(const MPoly& a, const MPoly& b);

Rational rat_gcd(const Rational& a, const Rational& b);

}  // namespace qhtoric
