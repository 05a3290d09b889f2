#include "qhtoric/ssalg.hpp"

#include <algorithm>

#include "qhtoric/errors.hpp"

namespace qhtoric {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

FDAlgebra::FDAlgebra(ParamSystemPtr sys, std::vector<std::string> basis,
                     std::vector<std::vector<std::vector<FieldElem>>> table,
                     std::vector<FieldElem> unity)
    : sys_(std::move(sys)),
      basis_(std::move(basis)),
      table_(std::move(table)),
      unity_(std::move(unity)) {
  std::size_t n = basis_.size();
  if (n == 0) throw ValidationError("algebra: empty basis");
  if (table_.size() != n || unity_.size() != n)
    throw ValidationError("algebra: table and unity must match the basis size");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw ValidationError("algebra: ragged table");
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j].size() != n)
        throw ValidationError("algebra: product " + at(i, j) + " has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i])
        throw ValidationError("algebra: products " + at(i, j) + " and " + at(j, i) + " differ");

  basis_trace_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElem t = FieldElem::zero(sys_);
    for (std::size_t k = 0; k < n; ++k) t = t + table_[i][k][k];
    basis_trace_.push_back(std::move(t));
  }

  for (std::size_t k = 0; k < n; ++k)
    if (mul(unity_, basis_vec(k)) != basis_vec(k))
      throw ValidationError("algebra: unity does not fix basis element " + std::to_string(k));

  if (n <= kAssocCheckBound) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = j; k < n; ++k)
          if (mul(table_[i][j], basis_vec(k)) != mul(basis_vec(i), table_[j][k]))
            throw ValidationError("algebra: associativity fails on basis triple (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
  }
}

const std::vector<FieldElem>& FDAlgebra::product(std::size_t i, std::size_t j) const {
  return table_.at(i).at(j);
}

std::vector<FieldElem> FDAlgebra::zero_vec() const {
  return std::vector<FieldElem>(dim(), FieldElem::zero(sys_));
}

std::vector<FieldElem> FDAlgebra::basis_vec(std::size_t i) const {
  std::vector<FieldElem> v = zero_vec();
  v.at(i) = FieldElem::one(sys_);
  return v;
}

bool FDAlgebra::vec_is_zero(const std::vector<FieldElem>& a) const {
  for (const FieldElem& c : a)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<FieldElem> FDAlgebra::mul(const std::vector<FieldElem>& a,
                                      const std::vector<FieldElem>& b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw ValidationError("algebra: coordinate length mismatch");
  std::vector<FieldElem> out = zero_vec();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      FieldElem c = a[i] * b[j];
      const std::vector<FieldElem>& prod = table_[i][j];
      for (std::size_t m = 0; m < n; ++m)
        if (!prod[m].is_zero()) out[m] = out[m] + c * prod[m];
    }
  }
  return out;
}

std::vector<FieldElem> FDAlgebra::power(const std::vector<FieldElem>& a, long e) const {
  if (e < 0) throw ValidationError("algebra: negative power");
  std::vector<FieldElem> out = unity_;
  for (long k = 0; k < e; ++k) out = mul(out, a);
  return out;
}

FieldElem FDAlgebra::trace_mul(const std::vector<FieldElem>& a) const {
  FieldElem t = FieldElem::zero(sys_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) t = t + a[i] * basis_trace_[i];
  return t;
}

FDAlgebra univariate_quotient(const UniPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw ValidationError("univariate_quotient: the modulus must have degree >= 1");
  ParamSystemPtr sys = f.system();
  std::size_t n = static_cast<std::size_t>(f.degree());

  // Coordinates of X^n modulo f.
  std::vector<FieldElem> top;
  top.reserve(n);
  for (std::size_t i = 0; i < n; ++i) top.push_back(-(f.coeff(static_cast<int>(i)) / f.lc()));

  // X^k mod f for k = 0 .. 2(n-1), by repeated companion steps.
  std::vector<std::vector<FieldElem>> pw;
  pw.reserve(2 * n - 1);
  {
    std::vector<FieldElem> e0(n, FieldElem::zero(sys));
    e0[0] = FieldElem::one(sys);
    pw.push_back(std::move(e0));
  }
  for (std::size_t k = 1; k + 1 <= 2 * n - 1; ++k) {
    const std::vector<FieldElem>& prev = pw.back();
    std::vector<FieldElem> next(n, FieldElem::zero(sys));
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = prev[i];
    const FieldElem& carry = prev[n - 1];
    if (!carry.is_zero())
      for (std::size_t i = 0; i < n; ++i) next[i] = next[i] + carry * top[i];
    pw.push_back(std::move(next));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  labels.emplace_back("1");
  for (std::size_t k = 1; k < n; ++k)
    labels.push_back(k == 1 ? f.var() : f.var() + "^" + std::to_string(k));

  std::vector<std::vector<std::vector<FieldElem>>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) table[i].push_back(pw[i + j]);
  }
  return FDAlgebra(sys, std::move(labels), std::move(table), pw[0]);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Semisimple: return "Semisimple";
    case Verdict::NotSemisimple: return "NotSemisimple";
    case Verdict::ContainsFieldSummand: return "ContainsFieldSummand";
    case Verdict::RadicalIdeal: return "RadicalIdeal";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Fixed prime list backing the schedule; together with the all-ones point
// this bounds the search at 25 candidates.
constexpr int kSchedulePrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

std::vector<std::size_t> occurring_vars(const MPoly& h, const std::vector<MPoly>& avoid) {
  const ParamSystemPtr& sys = h.system();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sys->size(); ++i) {
    bool used = h.depends_on(i);
    for (const MPoly& a : avoid) used = used || a.depends_on(i);
    if (used) out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<EvalPoint> nonvanishing_test(const MPoly& h, const std::vector<MPoly>& avoid) {
  if (h.is_zero()) return std::nullopt;
  const ParamSystemPtr& sys = h.system();
  std::vector<std::size_t> vars = occurring_vars(h, avoid);

  auto try_point = [&](const Rational& step) -> std::optional<EvalPoint> {
    std::map<std::string, Rational> pt;
    for (std::size_t j = 0; j < vars.size(); ++j)
      pt[sys->var(vars[j]).name] = 1 + step * Rational(static_cast<long>(j) + 1);
    for (const MPoly& a : avoid)
      if (a.eval(pt) == 0) return std::nullopt;
    Rational v = h.eval(pt);
    if (v == 0) return std::nullopt;
    return EvalPoint{std::move(pt), std::move(v)};
  };

  if (auto w = try_point(Rational(0))) return w;
  for (int p : kSchedulePrimes)
    if (auto w = try_point(Rational(1, p))) return w;
  return std::nullopt;
}

namespace {

// Exact division of h by a nonconstant polynomial u, working in the first
// variable u depends on; h must have nonnegative exponents there.
std::optional<MPoly> exact_quotient(const MPoly& h, const MPoly& u) {
  std::size_t pivot = 0;
  bool found = false;
  for (std::size_t i = 0; i < u.system()->size() && !found; ++i)
    if (u.depends_on(i)) {
      pivot = i;
      found = true;
    }
  if (!found) throw ValidationError("exact_quotient: constant divisor");
  if (h.min_deg_in(pivot) < 0) return std::nullopt;
  const std::string& name = u.system()->var(pivot).name;
  auto [q, r] = divrem(as_unipoly(h, name), as_unipoly(u, name));
  if (!r.is_zero()) return std::nullopt;
  for (const FieldElem& c : q.coeffs())
    if (!c.is_polynomial()) return std::nullopt;
  return to_mpoly(q);
}

}  // namespace

std::optional<NonzeroWitness> certify_nonzero(const std::string& label, const MPoly& q,
                                              const std::vector<MPoly>& assumed_units,
                                              const std::vector<MPoly>& avoid) {
  if (q.is_zero()) return std::nullopt;
  const ParamSystemPtr& sys = q.system();

  NonzeroWitness w{label, q, {}, {}, q, {}, Rational(0)};

  // Monomials in coefficient parameters are units; pull them out so the
  // remaining factor has exponent zero somewhere in every parameter.
  ExpVec content = q.monomial_content();
  for (std::size_t i = 0; i < content.size(); ++i)
    if (sys->var(i).ring_var) content[i] = 0;
  if (std::any_of(content.begin(), content.end(), [](int e) { return e != 0; })) {
    MPoly unit = MPoly::monomial(sys, Rational(1), content);
    w.reduced = w.reduced.divexact(unit);
    w.units.push_back(std::move(unit));
    w.mult.push_back(1);
  }

  for (const MPoly& u : assumed_units) {
    long count = 0;
    while (auto quot = exact_quotient(w.reduced, u)) {
      w.reduced = std::move(*quot);
      ++count;
    }
    if (count > 0) {
      w.units.push_back(u);
      w.mult.push_back(count);
    }
  }

  auto pt = nonvanishing_test(w.reduced, avoid);
  if (!pt) return std::nullopt;
  w.point = std::move(pt->point);
  w.value = std::move(pt->value);
  return w;
}

namespace {

UniPoly poly_mod(const UniPoly& p, const UniPoly& f) { return divrem(p, f).second; }

bool check_nonzero_witness(const NonzeroWitness& w) {
  if (w.units.size() != w.mult.size()) return false;
  MPoly recon = w.reduced;
  for (std::size_t i = 0; i < w.units.size(); ++i) {
    if (w.mult[i] < 1) return false;
    recon = recon * w.units[i].pow(w.mult[i]);
  }
  if (recon != w.quantity) return false;
  if (w.value == 0) return false;
  return w.reduced.eval(w.point) == w.value;
}

bool check_nilpotent_witness(const NilpotentWitness& w) {
  if (w.modulus.degree() < 1) return false;
  if (w.element.is_zero() || w.element.degree() >= w.modulus.degree()) return false;
  if (w.power < 2) return false;
  UniPoly r = poly_mod(w.element, w.modulus);
  for (int t = 2; t <= w.power; ++t) {
    if (r.is_zero()) return false;  // vanished before the stated power
    r = poly_mod(r * w.element, w.modulus);
  }
  return r.is_zero();
}

bool check_summand_witness(const SummandWitness& w) {
  if (w.part.degree() < 1) return false;
  if (w.part * w.complement != w.modulus) return false;
  UniPoly one = UniPoly::one(w.modulus.system(), w.modulus.var());
  if (w.bezout_u * w.part + w.bezout_v * w.complement != one) return false;
  if (w.sf_u * w.part + w.sf_v * w.part.derivative() != one) return false;
  UniPoly e = poly_mod(w.bezout_v * w.complement, w.modulus);
  if (e != w.idempotent || e.is_zero()) return false;
  return poly_mod(e * e, w.modulus) == e;
}

}  // namespace

bool reverify(const Certificate& cert) {
  for (const NonzeroWitness& w : cert.nonzero)
    if (!check_nonzero_witness(w)) return false;
  if (cert.nilpotent && !check_nilpotent_witness(*cert.nilpotent)) return false;
  if (cert.summand && !check_summand_witness(*cert.summand)) return false;
  return true;
}

bool reverify(const Certificate& cert, const FDAlgebra& alg) {
  if (!reverify(cert)) return false;
  if (cert.nilpotent_vec) {
    const auto& [v, power] = *cert.nilpotent_vec;
    if (v.size() != alg.dim() || alg.vec_is_zero(v) || power < 2) return false;
    if (!alg.vec_is_zero(alg.power(v, power))) return false;
    if (alg.vec_is_zero(alg.power(v, power - 1))) return false;
  }
  if (cert.idempotent_vec) {
    const auto& e = *cert.idempotent_vec;
    if (e.size() != alg.dim() || alg.vec_is_zero(e)) return false;
    if (alg.mul(e, e) != e) return false;
    if (e == alg.unity()) return false;
  }
  return true;
}

std::optional<NilpotentWitness> nilpotent_witness(const UniPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw ValidationError("nilpotent_witness: the modulus must have degree >= 1");
  SquarefreeDecomposition sf = squarefree_decomposition(f);
  int max_mult = 0;
  UniPoly m = UniPoly::one(f.system(), f.var());
  for (const auto& [factor, mult] : sf.factors) {
    m = m * factor;
    max_mult = std::max(max_mult, mult);
  }
  if (max_mult <= 1) return std::nullopt;
  if (m.degree() >= f.degree())
    throw InternalError("nilpotent_witness: squarefree part not a proper divisor");

  UniPoly r = m;
  int power = 1;
  while (!r.is_zero()) {
    r = poly_mod(r * m, f);
    ++power;
    if (power > max_mult + 1) throw InternalError("nilpotent_witness: power bound exceeded");
  }
  return NilpotentWitness{f, m, power};
}

Certificate is_semisimple_univariate(const UniPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw ValidationError("is_semisimple_univariate: need degree >= 1");
  Certificate cert;
  FieldElem res = resultant_uni(f, f.derivative());
  if (res.is_zero()) {
    cert.verdict = Verdict::NotSemisimple;
    cert.nilpotent = nilpotent_witness(f);
    if (!cert.nilpotent)
      throw InternalError("is_semisimple_univariate: zero resultant for a squarefree input");
    return cert;
  }
  std::vector<MPoly> avoid;
  if (!res.den().is_constant()) avoid.push_back(res.den());
  if (auto w = certify_nonzero("resultant of the polynomial and its derivative", res.num(), {},
                               avoid)) {
    cert.verdict = Verdict::Semisimple;
    cert.nonzero.push_back(std::move(*w));
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.unresolved.push_back(res.num());
  }
  return cert;
}

Certificate field_summand_certificate(const UniPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw ValidationError("field_summand_certificate: need degree >= 1");
  SquarefreeDecomposition sf = squarefree_decomposition(f);
  const UniPoly* part = nullptr;
  for (const auto& [factor, mult] : sf.factors)
    if (mult == 1 && factor.degree() >= 1) part = &factor;

  Certificate cert;
  if (!part) return cert;  // Inconclusive: no multiplicity-one part

  auto [complement, rem] = divrem(f, *part);
  if (!rem.is_zero()) throw InternalError("field_summand_certificate: inexact split");

  ExtGcd bez = ext_gcd(*part, complement);
  if (!bez.g.is_constant() || bez.g.is_zero())
    throw InternalError("field_summand_certificate: split factors are not coprime");
  ExtGcd sfc = ext_gcd(*part, part->derivative());
  if (!sfc.g.is_constant() || sfc.g.is_zero())
    throw InternalError("field_summand_certificate: part is not squarefree");

  UniPoly e = poly_mod(bez.v * complement, f);
  cert.verdict = Verdict::ContainsFieldSummand;
  cert.summand = SummandWitness{f, *part, complement, bez.u, bez.v, sfc.u, sfc.v, e};
  return cert;
}

namespace {

// Row echelon over the coefficient field; returns the determinant, or a
// kernel vector when the matrix is singular.
struct GaussResult {
  FieldElem det;
  std::optional<std::vector<FieldElem>> kernel;
};

GaussResult gauss(std::vector<std::vector<FieldElem>> m, const ParamSystemPtr& sys) {
  std::size_t n = m.size();
  std::vector<std::size_t> pivot_col;
  FieldElem det = FieldElem::one(sys);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t r = row;
    while (r < n && m[r][col].is_zero()) ++r;
    if (r == n) continue;
    if (r != row) {
      std::swap(m[r], m[row]);
      det = -det;
    }
    det = det * m[row][col];
    for (std::size_t i = row + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      FieldElem factor = m[i][col] / m[row][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - factor * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row == n) return {det, std::nullopt};

  // Singular: pick the first non-pivot column as the free coordinate and
  // back-substitute through the echelon rows.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;

  std::vector<FieldElem> v(n, FieldElem::zero(sys));
  v[free_col] = FieldElem::one(sys);
  for (std::size_t k = pivot_col.size(); k-- > 0;) {
    std::size_t c = pivot_col[k];
    FieldElem s = FieldElem::zero(sys);
    for (std::size_t j = c + 1; j < n; ++j)
      if (!v[j].is_zero()) s = s + m[k][j] * v[j];
    v[c] = -(s / m[k][c]);
  }
  return {FieldElem::zero(sys), std::move(v)};
}

}  // namespace

Certificate trace_form_semisimple(const FDAlgebra& alg, std::size_t dim_bound) {
  std::size_t n = alg.dim();
  if (n > dim_bound)
    throw ValidationError("trace_form_semisimple: dimension " + std::to_string(n) +
                          " exceeds the bound " + std::to_string(dim_bound));
  const ParamSystemPtr& sys = alg.system();
  std::vector<std::vector<FieldElem>> T;
  T.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElem> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(alg.trace_mul(alg.product(i, j)));
    T.push_back(std::move(row));
  }

  GaussResult g = gauss(T, sys);
  Certificate cert;
  if (g.kernel) {
    std::vector<FieldElem> v = std::move(*g.kernel);
    std::vector<FieldElem> r = v;
    int power = 1;
    while (!alg.vec_is_zero(r)) {
      r = alg.mul(r, v);
      ++power;
      if (power > static_cast<int>(n) + 1)
        throw InternalError("trace_form_semisimple: kernel vector is not nilpotent");
    }
    cert.verdict = Verdict::NotSemisimple;
    cert.nilpotent_vec = {std::move(v), power};
    return cert;
  }

  std::vector<MPoly> avoid;
  if (!g.det.den().is_constant()) avoid.push_back(g.det.den());
  if (auto w = certify_nonzero("trace form determinant", g.det.num(), {}, avoid)) {
    cert.verdict = Verdict::Semisimple;
    cert.nonzero.push_back(std::move(*w));
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.unresolved.push_back(g.det.num());
  }
  return cert;
}

bool check_substitution_homomorphism(const FDAlgebra& src, const std::string& var,
                                     const Rational& coef,
                                     const std::map<std::string, int>& target,
                                     const FDAlgebra& dst) {
  if (src.dim() != dst.dim())
    throw ValidationError("check_substitution_homomorphism: tables of different dimension");
  const ParamSystemPtr& sys = src.system();
  std::size_t vi = sys->require(var);

  bool identity = coef == 1 && target.size() == 1 && target.count(var) &&
                  target.at(var) == 1;
  std::map<std::size_t, int> tmap;
  if (!identity)
    for (const auto& [name, e] : target) tmap[sys->require(name)] = e;

  auto rewrite = [&](const FieldElem& c) -> FieldElem {
    if (identity) return c.map_onto(dst.system());
    return FieldElem(c.num().substitute_monomial(vi, coef, tmap),
                     c.den().substitute_monomial(vi, coef, tmap))
        .map_onto(dst.system());
  };

  std::size_t n = src.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rewrite(src.product(i, j)[k]) != dst.product(i, j)[k]) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (rewrite(src.unity()[k]) != dst.unity()[k]) return false;
  return true;
}

}  // namespace qhtoric
