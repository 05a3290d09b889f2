#include "qhtoric/symexp.hpp"

#include "qhtoric/errors.hpp"

namespace qhtoric {

SymExp SymExp::constant(const Rational& c) {
  SymExp e;
  e.const_ = c;
  return e;
}

SymExp SymExp::param(const std::string& name, const Rational& coef) {
  SymExp e;
  if (coef != 0) e.coef_[name] = coef;
  return e;
}

void SymExp::prune() {
  for (auto it = coef_.begin(); it != coef_.end();) {
    if (it->second == 0)
      it = coef_.erase(it);
    else
      ++it;
  }
}

SymExp SymExp::operator+(const SymExp& o) const {
  SymExp out = *this;
  out += o;
  return out;
}

SymExp& SymExp::operator+=(const SymExp& o) {
  const_ += o.const_;
  for (const auto& [name, c] : o.coef_) coef_[name] += c;
  prune();
  return *this;
}

SymExp SymExp::operator-(const SymExp& o) const { return *this + (-o); }

SymExp SymExp::operator-() const { return *this * Rational(-1); }

SymExp SymExp::operator*(const Rational& c) const {
  SymExp out;
  if (c == 0) return out;
  out.const_ = const_ * c;
  for (const auto& [name, v] : coef_) out.coef_[name] = v * c;
  return out;
}

bool SymExp::operator<(const SymExp& o) const {
  if (const_ != o.const_) return const_ < o.const_;
  // std::map already compares lexicographically by (key, value).
  return coef_ < o.coef_;
}

Rational SymExp::eval(const std::map<std::string, Rational>& values) const {
  Rational out = const_;
  for (const auto& [name, c] : coef_) {
    auto it = values.find(name);
    if (it == values.end())
      throw InternalError("SymExp::eval: no value for parameter '" + name + "'");
    out += c * it->second;
  }
  return out;
}

std::string SymExp::str() const {
  std::string out;
  auto push_term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Rational a = abs(c);
    if (name.empty()) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += name;
    }
  };
  for (const auto& [name, c] : coef_) push_term(c, name);
  push_term(const_, "");
  if (out.empty()) out = "0";
  return out;
}

}  // namespace qhtoric
