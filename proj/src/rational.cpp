#include "qhtoric/rational.hpp"

#include <cctype>

#include "qhtoric/errors.hpp"

namespace qhtoric {

Rational rat_parse(const std::string& text) {
  // Strict grammar: '-'? digits ('/' digits)?  No whitespace, no '+'.
  auto bad = [&]() -> ValidationError {
    return ValidationError("not a rational number: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  std::size_t den_begin = std::string::npos;
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
  }
  Rational r(text, 10);
  if (den_begin != std::string::npos && r.get_den() == 0)
    throw ValidationError("zero denominator in rational: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw ValidationError("0 raised to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                           : static_cast<unsigned long>(e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  out.canonicalize();
  if (invert) out = 1 / out;
  return out;
}

bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

long rat_to_long(const Rational& r) {
  if (!rat_is_integer(r)) throw InternalError("rat_to_long: not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw InternalError("rat_to_long: overflow: " + rat_str(r));
  return r.get_num().get_si();
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer int_lcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace qhtoric
