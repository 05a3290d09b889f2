#include "qhtoric/field_elem.hpp"

#include "qhtoric/errors.hpp"

namespace qhtoric {

FieldElem::FieldElem(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.system(), 1)) {}

FieldElem::FieldElem(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ValidationError("zero denominator");
  reduce();
}

FieldElem FieldElem::zero(ParamSystemPtr sys) { return FieldElem(MPoly::zero(std::move(sys))); }

FieldElem FieldElem::one(ParamSystemPtr sys) {
  return FieldElem(MPoly::constant(std::move(sys), 1));
}

FieldElem FieldElem::from_rational(ParamSystemPtr sys, const Rational& r) {
  return FieldElem(MPoly::constant(std::move(sys), r));
}

bool FieldElem::is_one() const { return den_.is_constant() && num_ == den_; }

void FieldElem::reduce() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.system(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  // Monomials are units: fold the denominator's monomial part into num.
  ExpVec mc = den_.monomial_content();
  bool shift = false;
  for (int e : mc)
    if (e != 0) shift = true;
  if (shift) {
    MPoly unit = MPoly::monomial(den_.system(), Rational(1), mc);
    den_ = den_.divexact(unit);
    num_ = num_ * unit.pow(-1);
  }
  const Rational& lc = den_.leading().second;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  out.num_ = -out.num_;
  return out;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return FieldElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (o.is_zero()) throw ValidationError("division by zero");
  return FieldElem(num_ * o.den_, den_ * o.num_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero");
  return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long e) const {
  if (e == 0) return one(system());
  if (e < 0) return inverse().pow(-e);
  FieldElem base = *this;
  FieldElem out = one(system());
  long k = e;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

bool FieldElem::operator==(const FieldElem& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

FieldElem FieldElem::specialize(const std::map<std::string, Rational>& values) const {
  MPoly d = den_.specialize(values);
  if (d.is_zero()) throw ValidationError("specialize: denominator vanishes");
  return FieldElem(num_.specialize(values), std::move(d));
}

Rational FieldElem::eval(const std::map<std::string, Rational>& values) const {
  Rational d = den_.eval(values);
  if (d == 0) throw ValidationError("eval: denominator vanishes at the point");
  return num_.eval(values) / d;
}

FieldElem FieldElem::map_onto(ParamSystemPtr dst) const {
  return FieldElem(num_.map_onto(dst), den_.map_onto(dst));
}

std::string FieldElem::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qhtoric
