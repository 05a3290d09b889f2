#include "qhtoric/mpoly.hpp"

#include <algorithm>
#include <cctype>

#include "qhtoric/errors.hpp"

namespace qhtoric {

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MPoly::MPoly(ParamSystemPtr sys) : sys_(std::move(sys)) {
  if (!sys_) throw InternalError("MPoly: null system");
}

MPoly MPoly::constant(ParamSystemPtr sys, const Rational& c) {
  MPoly p(std::move(sys));
  if (c != 0) p.t_.emplace(ExpVec(p.sys_->size(), 0), c);
  return p;
}

MPoly MPoly::variable(ParamSystemPtr sys, const std::string& name, int exp) {
  MPoly p(std::move(sys));
  std::size_t i = p.sys_->require(name);
  ExpVec e(p.sys_->size(), 0);
  e[i] = exp;
  p.t_.emplace(std::move(e), Rational(1));
  return p;
}

MPoly MPoly::monomial(ParamSystemPtr sys, const Rational& coef,
                      const std::map<std::string, int>& exps) {
  MPoly p(std::move(sys));
  if (coef == 0) return p;
  ExpVec e(p.sys_->size(), 0);
  for (const auto& [name, k] : exps) e[p.sys_->require(name)] = k;
  p.t_.emplace(std::move(e), coef);
  return p;
}

MPoly MPoly::monomial(ParamSystemPtr sys, const Rational& coef, ExpVec exps) {
  MPoly p(std::move(sys));
  if (exps.size() != p.sys_->size()) throw InternalError("MPoly::monomial: bad exponent size");
  if (coef != 0) p.t_.emplace(std::move(exps), coef);
  return p;
}

bool MPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const ExpVec& e = t_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

const std::pair<const ExpVec, Rational>& MPoly::leading() const {
  if (t_.empty()) throw InternalError("leading term of zero polynomial");
  return *t_.rbegin();
}

Rational MPoly::coeff(const ExpVec& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_term() const { return coeff(ExpVec(sys_->size(), 0)); }

int MPoly::deg_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return d;
}

int MPoly::min_deg_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (first || e[var] < d) d = e[var];
    first = false;
  }
  return d;
}

bool MPoly::depends_on(std::size_t var) const {
  for (const auto& [e, c] : t_)
    if (e[var] != 0) return true;
  return false;
}

void MPoly::check_same(const MPoly& o) const {
  if (sys_ == o.sys_) return;
  if (*sys_ != *o.sys_) throw InternalError("MPoly: mixed coefficient systems");
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out(sys_);
  for (const auto& [e, c] : t_) out.t_.emplace(e, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  out += o;
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  out -= o;
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same(o);
  MPoly out(sys_);
  ExpVec e(sys_->size());
  for (const auto& [ea, ca] : t_) {
    for (const auto& [eb, cb] : o.t_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly out(sys_);
  if (c == 0) return out;
  for (const auto& [e, v] : t_) out.t_.emplace(e, v * c);
  return out;
}

MPoly MPoly::pow(long e) const {
  if (e == 0) return constant(sys_, 1);
  if (e < 0) {
    if (t_.size() != 1)
      throw InternalError("MPoly::pow: negative power of a non-monomial");
    const auto& [exps, c] = *t_.begin();
    ExpVec ne(exps.size());
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = static_cast<int>(e) * exps[i];
    return monomial(sys_, rat_pow(c, e), std::move(ne));
  }
  MPoly base = *this;
  MPoly out = constant(sys_, 1);
  long k = e;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

bool MPoly::operator==(const MPoly& o) const {
  check_same(o);
  return t_ == o.t_;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly out(sys_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    ExpVec ne = e;
    ne[var] -= 1;
    out.add_term(ne, c * e[var]);
  }
  return out;
}

Rational MPoly::eval(const std::map<std::string, Rational>& values) const {
  std::vector<Rational> vals(sys_->size());
  std::vector<bool> have(sys_->size(), false);
  for (const auto& [name, v] : values) {
    auto i = sys_->index_of(name);
    if (i) {
      vals[*i] = v;
      have[*i] = true;
    }
  }
  Rational out(0);
  for (const auto& [e, c] : t_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!have[i])
        throw ValidationError("eval: no value for variable '" + sys_->var(i).name + "'");
      if (vals[i] == 0 && e[i] < 0)
        throw ValidationError("eval: zero value for '" + sys_->var(i).name +
                              "' with negative exponent");
      term *= rat_pow(vals[i], e[i]);
    }
    out += term;
  }
  return out;
}

MPoly MPoly::specialize(const std::map<std::string, Rational>& values) const {
  std::vector<std::optional<Rational>> vals(sys_->size());
  for (const auto& [name, v] : values) {
    auto i = sys_->index_of(name);
    if (i) vals[*i] = v;
  }
  MPoly out(sys_);
  for (const auto& [e, c] : t_) {
    Rational coef = c;
    ExpVec ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) {
      if (ne[i] == 0 || !vals[i]) continue;
      if (*vals[i] == 0 && ne[i] < 0)
        throw ValidationError("specialize: zero value for '" + sys_->var(i).name +
                              "' with negative exponent");
      coef *= rat_pow(*vals[i], ne[i]);
      ne[i] = 0;
    }
    out.add_term(ne, coef);
  }
  return out;
}

MPoly MPoly::substitute_monomial(std::size_t var, const Rational& coef,
                                 const std::map<std::size_t, int>& target) const {
  if (target.count(var)) throw InternalError("substitute_monomial: target mentions the variable");
  MPoly out(sys_);
  for (const auto& [e, c] : t_) {
    int k = e[var];
    if (k == 0) {
      out.add_term(e, c);
      continue;
    }
    if (coef == 0 && k < 0)
      throw ValidationError("substitute_monomial: zero coefficient with negative exponent");
    Rational nc = c * rat_pow(coef, k);
    if (nc == 0) continue;
    ExpVec ne = e;
    ne[var] = 0;
    for (const auto& [ti, te] : target) ne[ti] += k * te;
    out.add_term(ne, nc);
  }
  return out;
}

MPoly MPoly::apply_relations() const {
  MPoly cur = *this;
  std::vector<std::size_t> drops;
  for (const auto& rel : sys_->relations()) {
    std::map<std::size_t, int> target(rel.target.begin(), rel.target.end());
    cur = cur.substitute_monomial(rel.var, Rational(1), target);
    drops.push_back(rel.var);
  }
  if (drops.empty()) return cur;
  auto [nsys, remap] = sys_->without(drops);
  MPoly out(nsys);
  for (const auto& [e, c] : cur.t_) {
    ExpVec ne(nsys->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (remap[i]) {
        ne[*remap[i]] = e[i];
      } else if (e[i] != 0) {
        throw InternalError("apply_relations: substituted variable still present");
      }
    }
    out.add_term(ne, c);
  }
  return out;
}

MPoly MPoly::map_onto(ParamSystemPtr dst) const {
  std::vector<std::optional<std::size_t>> remap(sys_->size());
  for (std::size_t i = 0; i < sys_->size(); ++i) remap[i] = dst->index_of(sys_->var(i).name);
  MPoly out(dst);
  for (const auto& [e, c] : t_) {
    ExpVec ne(dst->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!remap[i])
        throw ValidationError("map_onto: variable '" + sys_->var(i).name +
                              "' has no counterpart in the target system");
      ne[*remap[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

namespace {

MPoly shifted(const MPoly& p, const ExpVec& delta) {
  MPoly out = MPoly::zero(p.system());
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += delta[i];
    out += MPoly::monomial(p.system(), c, std::move(ne));
  }
  return out;
}

ExpVec neg(const ExpVec& e) {
  ExpVec out = e;
  for (int& k : out) k = -k;
  return out;
}

}  // namespace

MPoly MPoly::divexact(const MPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw InternalError("divexact: division by zero");
  if (is_zero()) return *this;
  ExpVec mf = monomial_content(), md = d.monomial_content();
  MPoly f0 = shifted(*this, neg(mf));
  MPoly d0 = shifted(d, neg(md));
  const auto& [de, dc] = d0.leading();
  MPoly q(sys_);
  MPoly r = f0;
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    ExpVec qe(re.size());
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) throw InternalError("divexact: not divisible");
    }
    MPoly qt = monomial(sys_, rc / dc, std::move(qe));
    q += qt;
    r -= qt * d0;
  }
  ExpVec delta(mf.size());
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = mf[i] - md[i];
  return shifted(q, delta);
}

Rational rat_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Rational out;
  out.get_num() = int_gcd(a.get_num(), b.get_num());
  out.get_den() = int_lcm(a.get_den(), b.get_den());
  out.canonicalize();
  return abs(out);
}

Rational MPoly::content_rational() const {
  Rational g(0);
  for (const auto& [e, c] : t_) g = rat_gcd(g, c);
  return g;
}

ExpVec MPoly::monomial_content() const {
  ExpVec m(sys_->size(), 0);
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

MPoly MPoly::normalized() const {
  if (is_zero()) return *this;
  MPoly out = shifted(*this, neg(monomial_content()));
  Rational c = out.content_rational();
  if (out.leading().second < 0) c = -c;
  return out * (1 / c);
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += sys_->var(i).name;
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_str(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rat_str(a) + "*" + mono;
    }
  }
  return out;
}

namespace {

struct Token {
  enum Kind { Num, Ident, Star, Caret, Plus, Minus, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) return {Token::End, ""};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        std::size_t save = i_;
        ++i_;
        std::size_t db = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == db) i_ = save;  // lone '/', not part of the number
      }
      return {Token::Num, s_.substr(b, i_ - b)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                                s_[i_] == '_' || s_[i_] == '\''))
        ++i_;
      return {Token::Ident, s_.substr(b, i_ - b)};
    }
    ++i_;
    switch (c) {
      case '*': return {Token::Star, "*"};
      case '^': return {Token::Caret, "^"};
      case '+': return {Token::Plus, "+"};
      case '-': return {Token::Minus, "-"};
      default:
        throw ValidationError(std::string("unexpected character '") + c + "' in polynomial");
    }
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

int parse_exponent(Lexer& lex) {
  Token t = lex.next();
  int sign = 1;
  if (t.kind == Token::Minus) {
    sign = -1;
    t = lex.next();
  }
  if (t.kind != Token::Num || t.text.find('/') != std::string::npos)
    throw ValidationError("expected integer exponent after '^'");
  return sign * static_cast<int>(std::stol(t.text));
}

}  // namespace

MPoly MPoly::parse(ParamSystemPtr sys, const std::string& text) {
  MPoly out(sys);
  Lexer lex(text);
  Token t = lex.next();
  if (t.kind == Token::End) throw ValidationError("empty polynomial");
  while (true) {
    int sign = 1;
    while (t.kind == Token::Plus || t.kind == Token::Minus) {
      if (t.kind == Token::Minus) sign = -sign;
      t = lex.next();
    }
    Rational coef(sign);
    ExpVec exps(sys->size(), 0);
    while (true) {
      if (t.kind == Token::Num) {
        coef *= rat_parse(t.text);
        t = lex.next();
      } else if (t.kind == Token::Ident) {
        std::size_t idx = sys->require(t.text);
        t = lex.next();
        int e = 1;
        if (t.kind == Token::Caret) {
          e = parse_exponent(lex);
          t = lex.next();
        }
        exps[idx] += e;
      } else {
        throw ValidationError("expected a number or variable in polynomial");
      }
      if (t.kind == Token::Star) {
        t = lex.next();
        continue;
      }
      break;
    }
    out.add_term(exps, coef);
    if (t.kind == Token::End) break;
    if (t.kind != Token::Plus && t.kind != Token::Minus)
      throw ValidationError("expected '+' or '-' between polynomial terms");
  }
  return out;
}

std::vector<std::string> MPoly::scan_names(const std::string& text) {
  Lexer lex(text);
  std::vector<std::string> names;
  for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) {
    if (t.kind != Token::Ident) continue;
    if (std::find(names.begin(), names.end(), t.text) == names.end()) names.push_back(t.text);
  }
  return names;
}

namespace {

MPoly coeff_of(const MPoly& p, std::size_t v, int k) {
  MPoly out = MPoly::zero(p.system());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != k) continue;
    ExpVec ne = e;
    ne[v] = 0;
    out += MPoly::monomial(p.system(), c, std::move(ne));
  }
  return out;
}

MPoly times_var_pow(const MPoly& p, std::size_t v, int k) {
  MPoly out = MPoly::zero(p.system());
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = e;
    ne[v] += k;
    out += MPoly::monomial(p.system(), c, std::move(ne));
  }
  return out;
}

// gcd of the coefficients of p viewed as a univariate polynomial in v.
MPoly content_in(const MPoly& p, std::size_t v) {
  MPoly g = MPoly::zero(p.system());
  int lo = p.min_deg_in(v), hi = p.deg_in(v);
  for (int k = lo; k <= hi; ++k) {
    MPoly c = coeff_of(p, v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to v: lc(b)^(da-db+1) * a mod b.
MPoly prem(const MPoly& a, const MPoly& b, std::size_t v) {
  int da = a.deg_in(v), db = b.deg_in(v);
  MPoly lcb = coeff_of(b, v, db);
  MPoly r = a;
  long e = da - db + 1;
  while (!r.is_zero()) {
    int dr = r.deg_in(v);
    if (dr < db) break;
    MPoly lt = coeff_of(r, v, dr);
    r = lcb * r - times_var_pow(lt * b, v, dr - db);
    --e;
  }
  while (e-- > 0) r = lcb * r;
  return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  MPoly A = a.normalized();
  MPoly B = b.normalized();
  if (A.is_constant() || B.is_constant()) return MPoly::constant(a.system(), 1);
  std::size_t v = 0;
  while (!A.depends_on(v) && !B.depends_on(v)) ++v;
  MPoly ca = content_in(A, v);
  MPoly cb = content_in(B, v);
  MPoly pa = A.divexact(ca);
  MPoly pb = B.divexact(cb);
  MPoly c = gcd(ca, cb);
  if (pa.deg_in(v) < pb.deg_in(v)) std::swap(pa, pb);
  MPoly g = MPoly::constant(a.system(), 1);
  while (true) {
    if (pb.deg_in(v) == 0) {
      // pb is free of v (content extraction left a unit w.r.t. v)
      g = MPoly::constant(a.system(), 1);
      break;
    }
    MPoly r = prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.deg_in(v) == 0) {
      g = MPoly::constant(a.system(), 1);
      break;
    }
    pa = pb;
    pb = r.divexact(content_in(r, v)).normalized();
  }
  return (c * g).normalized();
}

}  // namespace qhtoric
