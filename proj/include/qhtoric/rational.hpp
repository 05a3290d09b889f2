#pragma once

#include <gmpxx.h>

#include <string>

namespace qhtoric {

// All coefficient arithmetic is exact. We use GMP's mpq_class directly and
// keep the project-specific contract (strict parsing, canonical printing,
// signed integer powers) in these helpers.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with decimal digits only; q > 0 after reduction.
// Throws ValidationError on anything else (whitespace, empty, zero denominator).
Rational rat_parse(const std::string& text);

// Canonical form: "p" or "p/q" with gcd(p,q)=1, q>1 only when needed.
std::string rat_str(const Rational& r);

// base^e for signed e; throws on 0^negative.
Rational rat_pow(const Rational& base, long e);

// Floor of log-free helpers used across the code base.
inline int rat_sign(const Rational& r) { return sgn(r); }
bool rat_is_integer(const Rational& r);
long rat_to_long(const Rational& r);  // requires an integer fitting in long

Integer int_gcd(const Integer& a, const Integer& b);
Integer int_lcm(const Integer& a, const Integer& b);

}  // namespace qhtoric
