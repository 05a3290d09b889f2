#include "qhtoric/unipoly.hpp"

#include <algorithm>

#include "qhtoric/errors.hpp"

namespace qhtoric {

UniPoly::UniPoly(ParamSystemPtr sys, std::string var) : sys_(std::move(sys)), var_(std::move(var)) {
  if (!sys_) throw InternalError("UniPoly: null system");
  if (var_.empty()) throw InternalError("UniPoly: empty variable name");
}

UniPoly UniPoly::zero(ParamSystemPtr sys, std::string var) {
  return UniPoly(std::move(sys), std::move(var));
}

UniPoly UniPoly::one(ParamSystemPtr sys, std::string var) {
  UniPoly p(sys, std::move(var));
  p.c_.push_back(FieldElem::one(sys));
  return p;
}

UniPoly UniPoly::variable(ParamSystemPtr sys, std::string var) {
  UniPoly p(sys, std::move(var));
  p.c_.push_back(FieldElem::zero(sys));
  p.c_.push_back(FieldElem::one(sys));
  return p;
}

UniPoly UniPoly::from_coeffs(ParamSystemPtr sys, std::string var, std::vector<FieldElem> coeffs) {
  UniPoly p(std::move(sys), std::move(var));
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldElem& UniPoly::lc() const {
  if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
  return c_.back();
}

FieldElem UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElem::zero(sys_);
  return c_[k];
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly out(sys_, var_);
  std::size_t n = std::max(c_.size(), o.c_.size());
  out.c_.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.c_.push_back(coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k)));
  out.trim();
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly out(sys_, var_);
  if (is_zero() || o.is_zero()) return out;
  out.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(sys_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  out.trim();
  return out;
}

UniPoly UniPoly::operator*(const FieldElem& c) const {
  UniPoly out(sys_, var_);
  if (c.is_zero()) return out;
  out.c_.reserve(c_.size());
  for (const auto& a : c_) out.c_.push_back(a * c);
  out.trim();
  return out;
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw InternalError("UniPoly::shifted: negative shift");
  if (is_zero()) return *this;
  UniPoly out(sys_, var_);
  out.c_.assign(c_.size() + k, FieldElem::zero(sys_));
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + k] = c_[i];
  return out;
}

UniPoly UniPoly::pow(long e) const {
  if (e < 0) throw InternalError("UniPoly::pow: negative power");
  UniPoly out = one(sys_, var_);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

bool UniPoly::operator==(const UniPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

UniPoly UniPoly::derivative() const {
  UniPoly out(sys_, var_);
  for (std::size_t k = 1; k < c_.size(); ++k)
    out.c_.push_back(c_[k] * FieldElem::from_rational(sys_, Rational(static_cast<long>(k))));
  out.trim();
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

FieldElem UniPoly::eval(const FieldElem& point) const {
  FieldElem out = FieldElem::zero(sys_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * point + *it;
  return out;
}

UniPoly UniPoly::specialize(const std::map<std::string, Rational>& values) const {
  UniPoly out(sys_, var_);
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(c.specialize(values));
  out.trim();
  return out;
}

UniPoly UniPoly::map_onto(ParamSystemPtr dst) const {
  UniPoly out(dst, var_);
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(c.map_onto(dst));
  out.trim();
  return out;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  bool flat = true;
  for (const auto& c : c_)
    if (!c.is_polynomial()) flat = false;
  if (flat) {
    ParamSystemPtr ext = sys_;
    if (!sys_->index_of(var_)) {
      VarDecl d;
      d.name = var_;
      d.ring_var = true;
      ext = sys_->with_extra({d});
    }
    MPoly acc = MPoly::zero(ext);
    for (std::size_t k = 0; k < c_.size(); ++k)
      acc += c_[k].num().map_onto(ext) * MPoly::variable(ext, var_, static_cast<int>(k));
    return acc.str();
  }
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    FieldElem c = coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (k > 0) {
      out += "*" + var_;
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw ValidationError("division by the zero polynomial");
  UniPoly q = UniPoly::zero(f.system(), f.var());
  UniPoly r = f;
  FieldElem inv = g.lc().inverse();
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int k = r.degree() - g.degree();
    FieldElem c = r.lc() * inv;
    UniPoly t = (UniPoly::one(f.system(), f.var()) * c).shifted(k);
    q = q + t;
    r = r - t * g;
  }
  return {q, r};
}

namespace {

// Dense univariate layer with polynomial coefficients, used for the
// fraction-free remainder sequences and determinants.
using PV = std::vector<MPoly>;

int pv_deg(const PV& a) { return static_cast<int>(a.size()) - 1; }

void pv_trim(PV& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// f multiplied by the least common denominator of its coefficients; returns
// the coefficient list and the multiplier.
std::pair<PV, MPoly> pv_clear(const UniPoly& f) {
  ParamSystemPtr sys = f.system();
  MPoly d = MPoly::constant(sys, 1);
  for (const auto& c : f.coeffs()) {
    if (c.is_zero() || c.is_polynomial()) continue;
    MPoly g = gcd(d, c.den());
    d = d * c.den().divexact(g);
  }
  PV out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    FieldElem scaled = c * FieldElem(d);
    if (!scaled.is_polynomial())
      throw InternalError("pv_clear: denominator survived clearing");
    // fold the monic-denominator constant (always 1 after reduce)
    out.push_back(scaled.num());
  }
  pv_trim(out);
  return {std::move(out), std::move(d)};
}

MPoly pv_content(const PV& a, const ParamSystemPtr& sys) {
  MPoly g = MPoly::zero(sys);
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

PV pv_divexact_coef(const PV& a, const MPoly& d) {
  PV out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c.divexact(d));
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
PV pv_prem(PV a, const PV& b) {
  int db = pv_deg(b);
  const MPoly lcb = b.back();
  long e = pv_deg(a) - db + 1;
  while (!a.empty() && pv_deg(a) >= db) {
    int dr = pv_deg(a);
    MPoly lt = a.back();
    PV na(static_cast<std::size_t>(dr), MPoly::zero(lt.system()));
    for (int i = 0; i < dr; ++i) na[i] = lcb * a[i];
    for (int j = 0; j < db; ++j) na[dr - db + j] -= lt * b[j];
    pv_trim(na);
    a = std::move(na);
    --e;
  }
  while (e-- > 0)
    for (auto& c : a) c = c * lcb;
  return a;
}

// Fraction-free determinant with row pivoting.
MPoly bareiss_det(std::vector<PV>& m, const ParamSystemPtr& sys) {
  std::size_t n = m.size();
  if (n == 0) return MPoly::constant(sys, 1);
  int sign = 1;
  MPoly prev = MPoly::constant(sys, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MPoly::zero(sys);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev);
      m[i][k] = MPoly::zero(sys);
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// Sylvester matrix of F (degree m) and G (degree n): n rows of F over m rows
// of G, columns graded from var^(m+n-1) down to 1.
std::vector<PV> sylvester(const PV& F, const PV& G, const ParamSystemPtr& sys) {
  int m = pv_deg(F), n = pv_deg(G);
  std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<PV> s(N, PV(N, MPoly::zero(sys)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = F[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = G[n - j];
  return s;
}

}  // namespace

UniPoly gcd_uni(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.degree() == 0 || g.degree() == 0) return UniPoly::one(f.system(), f.var());
  ParamSystemPtr sys = f.system();
  PV A = pv_clear(f).first;
  PV B = pv_clear(g).first;
  MPoly ca = pv_content(A, sys);
  if (!ca.is_constant()) A = pv_divexact_coef(A, ca);
  MPoly cb = pv_content(B, sys);
  if (!cb.is_constant()) B = pv_divexact_coef(B, cb);
  if (pv_deg(A) < pv_deg(B)) std::swap(A, B);
  MPoly gg = MPoly::constant(sys, 1);
  MPoly h = MPoly::constant(sys, 1);
  PV result;
  while (true) {
    long delta = pv_deg(A) - pv_deg(B);
    PV R = pv_prem(A, B);
    if (R.empty()) {
      result = B;
      break;
    }
    if (pv_deg(R) == 0) {
      result = {MPoly::constant(sys, 1)};
      break;
    }
    A = B;
    B = pv_divexact_coef(R, gg * h.pow(delta));
    gg = A.back();
    if (delta > 0) h = gg.pow(delta).divexact(h.pow(delta - 1));
  }
  MPoly cont = pv_content(result, sys);
  if (!cont.is_constant()) result = pv_divexact_coef(result, cont);
  std::vector<FieldElem> coeffs;
  coeffs.reserve(result.size());
  for (auto& c : result) coeffs.emplace_back(std::move(c));
  return UniPoly::from_coeffs(sys, f.var(), std::move(coeffs)).monic();
}

ExtGcd ext_gcd(const UniPoly& f, const UniPoly& g) {
  ParamSystemPtr sys = f.system();
  const std::string& var = f.var();
  UniPoly r0 = f, r1 = g;
  UniPoly s0 = UniPoly::one(sys, var), s1 = UniPoly::zero(sys, var);
  UniPoly t0 = UniPoly::zero(sys, var), t1 = UniPoly::one(sys, var);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElem inv = r0.lc().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

FieldElem resultant_uni(const UniPoly& f, const UniPoly& g) {
  ParamSystemPtr sys = f.system();
  if (f.is_zero() || g.is_zero()) return FieldElem::zero(sys);
  int m = f.degree(), n = g.degree();
  if (m == 0) return f.lc().pow(n);
  if (n == 0) return g.lc().pow(m);
  auto [F, df] = pv_clear(f);
  auto [G, dg] = pv_clear(g);
  auto S = sylvester(F, G, sys);
  MPoly det = bareiss_det(S, sys);
  FieldElem scale = FieldElem(df).pow(n) * FieldElem(dg).pow(m);
  return FieldElem(det) / scale;
}

ResultantCert resultant_cofactors(const UniPoly& f, const UniPoly& g) {
  ParamSystemPtr sys = f.system();
  const std::string& var = f.var();
  if (f.is_zero() || g.is_zero())
    return {FieldElem::zero(sys), UniPoly::zero(sys, var), UniPoly::zero(sys, var)};
  int m = f.degree(), n = g.degree();
  if (m == 0) {
    FieldElem res = f.lc().pow(n);
    return {res, UniPoly::one(sys, var) * f.lc().pow(n - 1), UniPoly::zero(sys, var)};
  }
  if (n == 0) {
    FieldElem res = g.lc().pow(m);
    return {res, UniPoly::zero(sys, var), UniPoly::one(sys, var) * g.lc().pow(m - 1)};
  }
  auto [F, df] = pv_clear(f);
  auto [G, dg] = pv_clear(g);
  auto S = sylvester(F, G, sys);
  std::size_t N = static_cast<std::size_t>(m + n);
  // Last row of the adjugate: y_j = (-1)^(j + N - 1) * minor(row j, last column).
  std::vector<MPoly> y;
  y.reserve(N);
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<PV> sub;
    sub.reserve(N - 1);
    for (std::size_t r = 0; r < N; ++r) {
      if (r == j) continue;
      PV row(S[r].begin(), S[r].end() - 1);
      sub.push_back(std::move(row));
    }
    MPoly minor = bareiss_det(sub, sys);
    if ((j + N - 1) % 2 != 0) minor = -minor;
    y.push_back(std::move(minor));
  }
  std::vector<PV> S2 = sylvester(F, G, sys);
  MPoly det = bareiss_det(S2, sys);
  FieldElem scale = FieldElem(df).pow(n) * FieldElem(dg).pow(m);
  FieldElem res = FieldElem(det) / scale;
  // y combines the rows: sum_j y_j * row_j = (0, ..., 0, det); the first n
  // rows carry var^(n-1-j) * F, the remaining m rows var^(m-1-i) * G.
  std::vector<FieldElem> uc(static_cast<std::size_t>(n), FieldElem::zero(sys));
  std::vector<FieldElem> vc(static_cast<std::size_t>(m), FieldElem::zero(sys));
  for (int j = 0; j < n; ++j) uc[n - 1 - j] = FieldElem(y[j] * df) / scale;
  for (int i = 0; i < m; ++i) vc[m - 1 - i] = FieldElem(y[n + i] * dg) / scale;
  ResultantCert cert{res, UniPoly::from_coeffs(sys, var, std::move(uc)),
                     UniPoly::from_coeffs(sys, var, std::move(vc))};
  UniPoly check = cert.u * f + cert.v * g - UniPoly::one(sys, var) * cert.res;
  if (!check.is_zero()) throw InternalError("resultant_cofactors: identity check failed");
  return cert;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw ValidationError("squarefree decomposition of zero");
  SquarefreeDecomposition out{f.lc(), {}};
  if (f.degree() == 0) return out;
  UniPoly F = f.monic();
  UniPoly a = gcd_uni(F, F.derivative());
  auto [b, rb] = divrem(F, a);
  auto [c, rc] = divrem(F.derivative(), a);
  if (!rb.is_zero() || !rc.is_zero()) throw InternalError("squarefree: inexact division");
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly ai = gcd_uni(b, d);
    if (ai.degree() > 0) out.factors.emplace_back(ai, i);
    auto [b2, r1] = divrem(b, ai);
    auto [c2, r2] = divrem(d, ai);
    if (!r1.is_zero() || !r2.is_zero()) throw InternalError("squarefree: inexact division");
    b = std::move(b2);
    d = c2 - b.derivative();
    ++i;
  }
  return out;
}

UniPoly as_unipoly(const MPoly& p, const std::string& var) {
  ParamSystemPtr sys = p.system();
  std::size_t v = sys->require(var);
  if (p.min_deg_in(v) < 0)
    throw ValidationError("as_unipoly: negative power of '" + var + "'");
  int d = p.deg_in(v);
  std::vector<MPoly> coeffs(static_cast<std::size_t>(d) + 1, MPoly::zero(sys));
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = e;
    int k = ne[v];
    ne[v] = 0;
    coeffs[static_cast<std::size_t>(k)] += MPoly::monomial(sys, c, std::move(ne));
  }
  std::vector<FieldElem> fc;
  fc.reserve(coeffs.size());
  for (auto& c : coeffs) fc.emplace_back(std::move(c));
  return UniPoly::from_coeffs(sys, var, std::move(fc));
}

MPoly to_mpoly(const UniPoly& f) {
  ParamSystemPtr sys = f.system();
  std::size_t v = sys->require(f.var());
  MPoly out = MPoly::zero(sys);
  for (int k = 0; k <= f.degree(); ++k) {
    FieldElem c = f.coeff(k);
    if (c.is_zero()) continue;
    if (!c.is_polynomial())
      throw ValidationError("to_mpoly: coefficient of " + f.var() + "^" + std::to_string(k) +
                            " is a proper fraction");
    if (c.num().depends_on(v))
      throw InternalError("to_mpoly: coefficient mentions the main variable");
    out += c.num() * MPoly::variable(sys, f.var(), k);
  }
  return out;
}

std::vector<Rational> specialize_all(const UniPoly& f,
                                     const std::map<std::string, Rational>& values) {
  std::vector<Rational> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.eval(values));
  return out;
}

}  // namespace qhtoric
