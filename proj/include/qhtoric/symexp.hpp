#pragma once

#include <map>
#include <string>

#include "qhtoric/rational.hpp"

namespace qhtoric {

// An exponent of the series variable kept symbolically as an affine expression
//     c0 + sum_i c_i * p_i
// over named size parameters p_i.  Used while rewriting relation systems, so
// that exponents like 2*eps + delta - 1 stay exact before any numeric values
// are substituted.
class SymExp {
 public:
  SymExp() = default;
  static SymExp constant(const Rational& c);
  static SymExp param(const std::string& name, const Rational& coef = Rational(1));

  const Rational& constant_part() const { return const_; }
  const std::map<std::string, Rational>& coeffs() const { return coef_; }

  bool is_zero() const { return const_ == 0 && coef_.empty(); }
  bool is_constant() const { return coef_.empty(); }

  SymExp operator+(const SymExp& o) const;
  SymExp operator-(const SymExp& o) const;
  SymExp operator-() const;
  SymExp operator*(const Rational& c) const;
  SymExp& operator+=(const SymExp& o);

  bool operator==(const SymExp& o) const { return const_ == o.const_ && coef_ == o.coef_; }
  bool operator!=(const SymExp& o) const { return !(*this == o); }
  bool operator<(const SymExp& o) const;  // total order for use as a map key

  // Numeric value once every referenced parameter has a value.
  Rational eval(const std::map<std::string, Rational>& values) const;

  // Canonical text, e.g. "2*eps + delta - 1", "0", "-1/3".
  std::string str() const;

 private:
  Rational const_{0};
  std::map<std::string, Rational> coef_;  // nonzero entries only
  void prune();
};

}  // namespace qhtoric
