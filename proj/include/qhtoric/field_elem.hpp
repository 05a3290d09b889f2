#pragma once

#include <string>

#include "qhtoric/mpoly.hpp"

namespace qhtoric {

// Element of the fraction field of the coefficient ring: num/den with den a
// nonzero polynomial.  Kept reduced: gcd(num, den) is a unit, den has no
// monomial content (monomials are units because coefficients are Laurent),
// and den has leading coefficient 1.
class FieldElem {
 public:
  explicit FieldElem(MPoly num);
  FieldElem(MPoly num, MPoly den);
  static FieldElem zero(ParamSystemPtr sys);
  static FieldElem one(ParamSystemPtr sys);
  static FieldElem from_rational(ParamSystemPtr sys, const Rational& r);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const ParamSystemPtr& system() const { return num_.system(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Numeric substitution of some variables; the denominator must not vanish.
  FieldElem specialize(const std::map<std::string, Rational>& values) const;
  Rational eval(const std::map<std::string, Rational>& values) const;

  FieldElem map_onto(ParamSystemPtr dst) const;

  std::string str() const;

 private:
  MPoly num_, den_;
  void reduce();
};

}  // namespace qhtoric
