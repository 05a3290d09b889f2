#include "qhtoric/batyrev.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qhtoric/errors.hpp"

namespace qhtoric {

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InternalError("exponent out of range");
  return z.get_si();
}

Integer rat_floor_z(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

std::string pair_str(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "{" << i + 1 << ", " << j + 1 << "}";
  return os.str();
}

Integer cross_z(const Vec2Z& a, const Vec2Z& b) { return a.x * b.y - a.y * b.x; }

// ---------------------------------------------------------------------------
// Polynomials over the survivors with coefficients sum_i r_i s^{h_i}, the
// working form of the additive rows while exponents are still affine
// expressions in the sizes.  Monomials reuse the grlex order of MPoly.

using SCoef = std::map<SymExp, Rational>;

void scoef_add(SCoef& a, const SymExp& h, const Rational& r) {
  auto it = a.find(h);
  if (it == a.end()) {
    if (r != 0) a.emplace(h, r);
    return;
  }
  it->second += r;
  if (it->second == 0) a.erase(it);
}

struct SPoly {
  std::map<ExpVec, SCoef, GrlexLess> t;

  bool is_zero() const { return t.empty(); }

  void add_term(const ExpVec& mono, const SymExp& h, const Rational& r) {
    if (r == 0) return;
    SCoef& c = t[mono];
    scoef_add(c, h, r);
    if (c.empty()) t.erase(mono);
  }

  SPoly operator+(const SPoly& o) const {
    SPoly out = *this;
    for (const auto& [m, c] : o.t)
      for (const auto& [h, r] : c) out.add_term(m, h, r);
    return out;
  }

  SPoly mul_term(const ExpVec& shift, const SymExp& h, const Rational& r) const {
    SPoly out;
    if (r == 0) return out;
    for (const auto& [m, c] : t) {
      ExpVec e = m;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
      for (const auto& [h0, r0] : c) out.add_term(e, h0 + h, r0 * r);
    }
    return out;
  }

  SPoly operator*(const SPoly& o) const {
    SPoly out;
    for (const auto& [m, c] : o.t)
      for (const auto& [h, r] : c) out = out + mul_term(m, h, r);
    return out;
  }

  SPoly pow(long e, std::size_t nslots) const {
    if (e < 0) throw InternalError("negative power of a sum");
    SPoly out;
    out.add_term(ExpVec(nslots, 0), SymExp(), Rational(1));
    for (long k = 0; k < e; ++k) out = out * (*this);
    return out;
  }

  int min_exp(std::size_t slot) const {
    int mn = 0;
    bool first = true;
    for (const auto& [m, c] : t) {
      if (first || m[slot] < mn) mn = m[slot];
      first = false;
    }
    return mn;
  }

  int max_exp(std::size_t slot) const {
    int mx = 0;
    bool first = true;
    for (const auto& [m, c] : t) {
      if (first || m[slot] > mx) mx = m[slot];
      first = false;
    }
    return mx;
  }
};

// Multiply by the monomial making every slot's minimal exponent zero; the
// recorded shift per slot may be negative (stripping a common factor).
std::vector<int> sp_clear(SPoly& g) {
  if (g.is_zero()) return {};
  std::size_t n = g.t.begin()->first.size();
  std::vector<int> shift(n, 0);
  for (std::size_t k = 0; k < n; ++k) shift[k] = -g.min_exp(k);
  if (std::all_of(shift.begin(), shift.end(), [](int s) { return s == 0; })) return shift;
  std::map<ExpVec, SCoef, GrlexLess> moved;
  for (auto& [m, c] : g.t) {
    ExpVec e = m;
    for (std::size_t k = 0; k < n; ++k) e[k] += shift[k];
    moved.emplace(std::move(e), std::move(c));
  }
  g.t = std::move(moved);
  return shift;
}

// The coefficient that decides the overall sign: the grlex-leading monomial's
// entry at its largest exponent expression.
Rational sp_lead_coef(const SPoly& g) {
  const SCoef& c = g.t.rbegin()->second;
  return c.rbegin()->second;
}

Rational sp_sign_normalize(SPoly& g) {
  if (g.is_zero() || sp_lead_coef(g) > 0) return Rational(1);
  for (auto& [m, c] : g.t)
    for (auto& [h, r] : c) r = -r;
  return Rational(-1);
}

void sp_scale(SPoly& g, const SymExp& h, const Rational& r) {
  std::map<ExpVec, SCoef, GrlexLess> out;
  for (auto& [m, c] : g.t) {
    SCoef nc;
    for (auto& [h0, r0] : c) nc.emplace(h0 + h, r0 * r);
    out.emplace(m, std::move(nc));
  }
  g.t = std::move(out);
}

// Deterministic order used to sort the two row generators: larger leading
// monomial first, ties broken along the descending term sequence.
bool sp_before(const SPoly& a, const SPoly& b) {
  auto ia = a.t.rbegin(), ib = b.t.rbegin();
  GrlexLess less;
  for (; ia != a.t.rend() && ib != b.t.rend(); ++ia, ++ib) {
    if (less(ib->first, ia->first)) return true;
    if (less(ia->first, ib->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ib != b.t.rend();
}

// Substitute slot := val into g; every occurrence of the slot must have a
// nonnegative exponent (guaranteed after clearing).
SPoly sp_substitute(const SPoly& g, std::size_t slot, const SPoly& val, std::size_t nslots) {
  SPoly out;
  for (const auto& [m, c] : g.t) {
    int k = m[slot];
    if (k < 0) throw InternalError("substitution into a negative exponent");
    ExpVec base = m;
    base[slot] = 0;
    SPoly term;
    term.t.emplace(base, c);
    if (k > 0) term = term * val.pow(k, nslots);
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expressing exponents as integer monomials in the declared parameters.
// Each parameter stands for s^{meaning}; an exponent h is representable when
// h = sum_j k_j meaning_j with integer k.  The reduction additionally allows
// one global offset t (the same for every generator exponent), carried by the
// pure-constant parameter's residue class when one exists.

struct ExpSolution {
  std::vector<Rational> k;  // per parameter; the pure-constant slot is filled later
  Rational residue;         // h.const minus the contribution of the solved part
};

class ExpLattice {
 public:
  explicit ExpLattice(std::vector<VarDecl> params) : params_(std::move(params)) {
    for (std::size_t j = 0; j < params_.size(); ++j) {
      const VarDecl& d = params_[j];
      if (d.ring_var || !d.meaning) throw InternalError("output parameter without a meaning");
      for (const auto& [s, c] : d.meaning->coeffs()) symbol_index_.emplace(s, 0);
      if (d.meaning->is_constant()) {
        if (const_param_) throw ValidationError("more than one constant output parameter");
        if (d.meaning->constant_part() <= 0)
          throw ValidationError("constant output parameter must stand for a positive power");
        const_param_ = j;
      }
    }
    std::size_t n = 0;
    for (auto& [s, idx] : symbol_index_) idx = n++;
  }

  const std::vector<VarDecl>& params() const { return params_; }
  std::optional<std::size_t> const_param() const { return const_param_; }

  // Solves the symbol part of h; the constant direction is left to the caller.
  ExpSolution solve_symbols(const SymExp& h) const {
    std::size_t rows = symbol_index_.size(), cols = params_.size();
    for (const auto& [s, c] : h.coeffs())
      if (!symbol_index_.count(s))
        throw ValidationError("exponent " + h.str() + " uses a size with no output parameter");
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [s, c] : params_[j].meaning->coeffs()) M[symbol_index_.at(s)][j] = c;
    for (const auto& [s, c] : h.coeffs()) M[symbol_index_.at(s)][cols] = c;

    std::vector<std::optional<std::size_t>> pivot_of_col(cols);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
      std::size_t p = rank;
      while (p < rows && M[p][j] == 0) ++p;
      if (p == rows) continue;
      std::swap(M[p], M[rank]);
      Rational inv = Rational(1) / M[rank][j];
      for (std::size_t k = j; k <= cols; ++k) M[rank][k] *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == rank || M[r][j] == 0) continue;
        Rational f = M[r][j];
        for (std::size_t k = j; k <= cols; ++k) M[r][k] -= f * M[rank][k];
      }
      pivot_of_col[j] = rank;
      ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
      if (M[r][cols] != 0)
        throw ValidationError("exponent " + h.str() +
                              " is not a combination of the output parameter meanings");
    ExpSolution sol;
    sol.k.assign(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
      if (pivot_of_col[j]) {
        sol.k[j] = M[*pivot_of_col[j]][cols];
      } else if (!params_[j].meaning->is_constant()) {
        throw ValidationError("output parameter meanings are not independent");
      }
    }
    sol.residue = h.constant_part();
    for (std::size_t j = 0; j < cols; ++j)
      sol.residue -= sol.k[j] * params_[j].meaning->constant_part();
    return sol;
  }

  // One offset t making every residue an integer multiple of the constant
  // parameter's step (or zero when there is none); minimal |t|, ties positive.
  Rational solve_offset(const std::vector<SymExp>& exps) const {
    if (exps.empty()) return Rational(0);
    std::vector<Rational> residues;
    residues.reserve(exps.size());
    for (const SymExp& h : exps) residues.push_back(solve_symbols(h).residue);
    if (!const_param_) {
      for (const Rational& r : residues)
        if (r != residues.front())
          throw ValidationError("generator exponents need incompatible global units");
      return residues.front();
    }
    Rational step = params_[*const_param_].meaning->constant_part();
    Rational q = Rational(rat_floor_z(residues.front() / step + Rational(1, 2)));
    Rational t = residues.front() - step * q;
    if (t * 2 == -step) t += step;  // halfway: prefer the positive offset
    for (const Rational& r : residues)
      if (!rat_is_integer((r - t) / step))
        throw ValidationError("generator exponents need incompatible global units");
    return t;
  }

  // Integer parameter exponents for h - t; throws unless exact.
  std::vector<int> monomial(const SymExp& h, const Rational& t) const {
    ExpSolution sol = solve_symbols(h);
    std::vector<int> k(params_.size(), 0);
    for (std::size_t j = 0; j < params_.size(); ++j) {
      if (const_param_ && j == *const_param_) continue;
      if (!rat_is_integer(sol.k[j]))
        throw ValidationError("exponent " + h.str() + " needs a fractional parameter power");
      k[j] = static_cast<int>(rat_to_long(sol.k[j]));
    }
    Rational rest = sol.residue - t;
    if (const_param_) {
      Rational step = params_[*const_param_].meaning->constant_part();
      Rational kc = rest / step;
      if (!rat_is_integer(kc))
        throw ValidationError("exponent " + h.str() + " is off the parameter lattice");
      k[*const_param_] = static_cast<int>(rat_to_long(kc));
    } else if (rest != 0) {
      throw ValidationError("exponent " + h.str() + " is off the parameter lattice");
    }
    return k;
  }

 private:
  std::vector<VarDecl> params_;
  std::map<std::string, std::size_t> symbol_index_;
  std::optional<std::size_t> const_param_;
};

// Output ring: survivors' names first, then the parameters.
ParamSystemPtr build_out_system(const std::vector<std::string>& names, const ExpLattice& lat) {
  ParamSystem::Builder b;
  for (const std::string& n : names) b.add_ring_var(n);
  for (const VarDecl& d : lat.params()) b.add_decl(d);
  return b.build();
}

MPoly to_mpoly_exp(const ParamSystemPtr& sys, const ExpLattice& lat,
                   const std::vector<std::string>& slot_names, const SPoly& g, const Rational& t) {
  MPoly out = MPoly::zero(sys);
  for (const auto& [m, c] : g.t) {
    std::map<std::string, int> e;
    for (std::size_t k = 0; k < slot_names.size(); ++k)
      if (m[k] != 0) e[slot_names[k]] = m[k];
    for (const auto& [h, r] : c) {
      std::vector<int> pk = lat.monomial(h, t);
      std::map<std::string, int> em = e;
      for (std::size_t j = 0; j < pk.size(); ++j)
        if (pk[j] != 0) em[lat.params()[j].name] = pk[j];
      out += MPoly::monomial(sys, r, em);
    }
  }
  return out;
}

// With no declared parameters every exponent must be numeric; one parameter
// standing for s^{1/N} is derived (called s when N = 1, t otherwise).
std::vector<VarDecl> derive_params(const std::vector<SymExp>& exps) {
  Integer den = 1;
  for (const SymExp& h : exps) {
    if (!h.is_constant())
      throw ValidationError("symbolic sizes require declared output parameters");
    den = int_lcm(den, h.constant_part().get_den());
  }
  Rational step = Rational(1) / Rational(den);
  VarDecl d;
  d.name = den == 1 ? "s" : "t";
  d.ring_var = false;
  d.meaning = SymExp::constant(step);
  d.gamma = step;
  return {d};
}

// ---------------------------------------------------------------------------

SymExp eta_sum(const std::vector<SymExp>& eta, const std::vector<Integer>& d) {
  SymExp h;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) h += eta[k] * Rational(d[k]);
  return h;
}

struct FrameData {
  std::vector<SymExp> sigma;
  std::vector<VarDecl> out_params;  // may be empty: derived later
  GenScale scale;
  std::vector<std::string> survivor_names;
};

FrameData resolve_frame(const MomentPolytope& p, const ReductionFrame& f) {
  FrameData fd;
  fd.scale = f.scale;
  fd.out_params = f.out_params;
  fd.survivor_names = f.survivor_names;
  if (f.sigma.empty()) {
    for (const SymExp& h : p.sym_supports) fd.sigma.push_back(-h);
  } else {
    if (f.sigma.size() != p.size())
      throw ValidationError("frame rescaling must give one exponent per facet");
    fd.sigma = f.sigma;
  }
  return fd;
}

std::string facet_var_name(const FrameData& fd, std::size_t ordinal, std::size_t facet) {
  if (fd.survivor_names.empty()) return "Z" + std::to_string(facet + 1);
  return fd.survivor_names.at(ordinal);
}

// The hard-coded one-variable form for triangles: the additive rows force all
// three facet classes together and the one primitive collection has length
// three, so the quotient is generated by X with X^3 = s^{eta_0+eta_1+eta_2}
// after the default rescaling.
ReducedPresentation reduce_triangle(const MomentPolytope& p, const ReductionFrame& frame) {
  Vec2Z sum{p.normals[0].x + p.normals[1].x + p.normals[2].x,
            p.normals[0].y + p.normals[1].y + p.normals[2].y};
  if (!(sum == Vec2Z{0, 0})) throw InternalError("triangle normals do not cancel");
  FrameData fd = resolve_frame(p, frame);
  if (!fd.survivor_names.empty() && fd.survivor_names.size() != 1)
    throw ValidationError("triangles reduce to one variable; frame names one survivor");

  const std::vector<SymExp>& eta = p.sym_supports;
  SymExp E = eta[1] + eta[2] - eta[0] * Rational(2) - fd.sigma[0] * Rational(3);
  std::vector<SymExp> exps{E};
  std::vector<VarDecl> params = fd.out_params.empty() ? derive_params(exps) : fd.out_params;
  ExpLattice lat(params);
  Rational t = lat.solve_offset(exps);

  ReducedPresentation red;
  red.kind = ReducedPresentation::Kind::Univariate;
  red.vars = {facet_var_name(fd, 0, 0)};
  red.sys = build_out_system(red.vars, lat);
  red.surviving_facets = {0};
  red.global_unit = SymExp::constant(t);
  for (std::size_t i : {std::size_t{1}, std::size_t{2}}) {
    MonomialBacksub b;
    b.facet = i;
    b.s_exp = eta[0] - eta[i];
    b.expo = {{0, 1}};
    red.backsubs.push_back(std::move(b));
  }
  SPoly g;
  g.add_term(ExpVec{3}, SymExp(), Rational(1));
  g.add_term(ExpVec{0}, E, Rational(-1));
  red.generators.push_back(to_mpoly_exp(red.sys, lat, red.vars, g, t));
  return red;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<PrimitivePair> primitive_sets(const MomentPolytope& p) {
  classify_fano(p);
  const std::size_t l = p.size();
  if (l == 3)
    throw UnsupportedModelError(
        "a triangle has no primitive pairs (its one primitive collection has three "
        "elements); reduce() emits the one-variable quotient directly");

  std::vector<PrimitivePair> out;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == l - 1);
      if (adjacent) continue;
      PrimitivePair pr;
      pr.i = i;
      pr.j = j;
      pr.w = Vec2Z{p.normals[i].x + p.normals[j].x, p.normals[i].y + p.normals[j].y};
      if (!(pr.w == Vec2Z{0, 0})) {
        bool found = false;
        for (std::size_t m = 0; m < l && !found; ++m) {
          const Vec2Z& a = p.normals[m];
          const Vec2Z& b = p.normals[(m + 1) % l];
          Integer det = cross_z(a, b);
          if (det != 1 && det != -1)
            throw InternalError("fan cone " + std::to_string(m) + " is not unimodular");
          Integer ca = cross_z(pr.w, b) * det;  // 1/det = det for det = +-1
          Integer cb = cross_z(a, pr.w) * det;
          if (ca < 0 || cb < 0 || (ca == 0 && cb == 0)) continue;
          found = true;
          std::size_t next = (m + 1) % l;
          if (ca > 0) {
            pr.J.push_back(m);
            pr.c.push_back(ca);
          }
          if (cb > 0) {
            pr.J.push_back(next);
            pr.c.push_back(cb);
          }
          if (pr.J.size() == 2 && pr.J[0] > pr.J[1]) {
            std::swap(pr.J[0], pr.J[1]);
            std::swap(pr.c[0], pr.c[1]);
          }
        }
        if (!found) throw InternalError("no fan cone contains the normal sum");
      }
      for (std::size_t m : pr.J)
        if (m == i || m == j)
          throw InternalError("minimal cone of pair " + pair_str(i, j) +
                              " meets the pair itself");
      out.push_back(std::move(pr));
    }
  }
  return out;
}

QuantumRelation mult_relation(const MomentPolytope& p, const PrimitivePair& pr,
                              bool nonminimal_d) {
  const std::size_t l = p.size();
  const std::vector<SymExp>& eta = p.sym_supports;

  // Cone data actually used for d; the nonminimal variant pads to a full
  // two-cone with zero coefficients, which changes nothing downstream.
  std::vector<std::pair<std::size_t, Integer>> cone;
  for (std::size_t k = 0; k < pr.J.size(); ++k) cone.emplace_back(pr.J[k], pr.c[k]);
  if (nonminimal_d) {
    if (cone.empty()) {
      cone.emplace_back(0, 0);
      cone.emplace_back(1, 0);
    } else if (cone.size() == 1) {
      cone.emplace_back((cone[0].first + 1) % l, 0);
    }
  }

  QuantumRelation rel;
  rel.pair = pr;
  rel.d.assign(l, Integer(0));
  rel.d[pr.i] += 1;
  rel.d[pr.j] += 1;
  for (const auto& [m, cm] : cone) rel.d[m] -= cm;

  Integer dsum = 0;
  for (const Integer& dk : rel.d) dsum += dk;
  rel.q_exp = -to_long(dsum);
  rel.s_exp = eta_sum(eta, rel.d);
  Rational sval = 0;
  for (std::size_t k = 0; k < l; ++k)
    if (rel.d[k] != 0) sval += Rational(rel.d[k]) * p.supports[k];
  rel.s_exp_value = sval;

  rel.rhs.assign(l, Integer(0));
  for (std::size_t m = 0; m < l; ++m)
    if (m != pr.i && m != pr.j) rel.rhs[m] = -rel.d[m];
  for (std::size_t m = 0; m < l; ++m)
    if (rel.rhs[m] < 0)
      throw InternalError("cone coefficient of pair " + pair_str(pr.i, pr.j) +
                          " is not a positive integer");

  // Degree bookkeeping: both sides of u_i * u_j = s^.. q^.. prod u^rhs must
  // have the same degree under deg u = deg q = 2, deg s = 0, unity of degree
  // 2n = 4, and deg(a * b) = deg a + deg b - 2n.
  Integer csum = 0;
  for (const Integer& r : rel.rhs) csum += r;
  Integer lhs_deg = 0;  // 2 + 2 - 4
  Integer prod_deg = csum == 0 ? Integer(4) : Integer(2 * csum - 4 * (csum - 1));
  Integer rhs_deg = 2 * Integer(rel.q_exp) + prod_deg;
  if (rhs_deg != lhs_deg)
    throw InternalError("relation of pair " + pair_str(pr.i, pr.j) + " is not homogeneous");

  // The rescaled classes v_k = s^{-eta_k} q u_k must satisfy the unit-free
  // form v_i v_j = prod v^rhs: all s and q factors have to cancel.
  SymExp v_s = rel.s_exp - eta[pr.i] - eta[pr.j];
  for (std::size_t m = 0; m < l; ++m)
    if (rel.rhs[m] != 0) v_s += eta[m] * Rational(rel.rhs[m]);
  if (!v_s.is_zero() || Integer(2 + rel.q_exp) != csum)
    throw InternalError("rescaled relation of pair " + pair_str(pr.i, pr.j) +
                        " keeps a unit factor");
  return rel;
}

QHPresentation presentation(const MomentPolytope& p, bool nonminimal_d) {
  QHPresentation pres;
  pres.polytope = p;
  for (const PrimitivePair& pr : primitive_sets(p))
    pres.relations.push_back(mult_relation(p, pr, nonminimal_d));
  const std::size_t l = p.size();
  pres.additive[0].reserve(l);
  pres.additive[1].reserve(l);
  for (std::size_t k = 0; k < l; ++k) {
    pres.additive[0].push_back(p.normals[k].x);
    pres.additive[1].push_back(p.normals[k].y);
  }
  for (const SymExp& h : p.sym_supports) pres.v_exp.push_back(-h);
  return pres;
}

ReducedPresentation reduce(const QHPresentation& pres, const ReductionFrame& frame) {
  const MomentPolytope& p = pres.polytope;
  const std::size_t l = p.size();
  if (l < 4) throw UnsupportedModelError("reduce(presentation) needs at least four facets");
  if (pres.additive[0].size() != l || pres.additive[1].size() != l)
    throw ValidationError("additive rows must have one entry per facet");
  for (const QuantumRelation& rel : pres.relations)
    if (rel.rhs.size() != l || rel.pair.i >= l || rel.pair.j >= l)
      throw ValidationError("relation does not match the polytope");
  FrameData fd = resolve_frame(p, frame);

  // Stage one: the multiplicative relations are unit-free monomial identities
  // in the v's; eliminate one variable per relation that is not already
  // implied.  Back-substitutions are kept closed (they only mention facets
  // still in play).
  std::map<std::size_t, std::map<std::size_t, int>> bs;
  std::vector<std::size_t> dependent;
  for (std::size_t idx = 0; idx < pres.relations.size(); ++idx) {
    const QuantumRelation& rel = pres.relations[idx];
    std::map<std::size_t, int> E;
    auto add = [&E](std::size_t k, int e) {
      auto it = E.find(k);
      if (it == E.end()) {
        if (e != 0) E.emplace(k, e);
        return;
      }
      it->second += e;
      if (it->second == 0) E.erase(it);
    };
    add(rel.pair.i, 1);
    add(rel.pair.j, 1);
    for (std::size_t m = 0; m < l; ++m)
      if (rel.rhs[m] != 0) add(m, -static_cast<int>(to_long(rel.rhs[m])));
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = E.begin(); it != E.end(); ++it) {
        auto sub = bs.find(it->first);
        if (sub == bs.end()) continue;
        int e = it->second;
        E.erase(it);
        for (const auto& [k, ek] : sub->second) add(k, ek * e);
        changed = true;
        break;
      }
    }
    if (E.empty()) {
      dependent.push_back(idx);
      continue;
    }
    long pick = -1;
    for (std::size_t m : rel.pair.J) {
      auto it = E.find(m);
      if (it != E.end() && (it->second == 1 || it->second == -1))
        pick = std::max(pick, static_cast<long>(m));
    }
    if (pick < 0)
      for (const auto& [k, e] : E)
        if (e == 1 || e == -1) pick = std::max(pick, static_cast<long>(k));
    if (pick < 0)
      throw InternalError("relation of pair " + pair_str(rel.pair.i, rel.pair.j) +
                          " has no unit exponent to eliminate");
    std::size_t v = static_cast<std::size_t>(pick);
    int sgn = E.at(v);
    std::map<std::size_t, int> expr;
    for (const auto& [k, e] : E)
      if (k != v) expr[k] = -e * sgn;
    for (auto& [other, target] : bs) {
      auto it = target.find(v);
      if (it == target.end()) continue;
      int e0 = it->second;
      target.erase(it);
      for (const auto& [k, e] : expr) {
        target[k] += e0 * e;
        if (target[k] == 0) target.erase(k);
      }
    }
    bs.emplace(v, std::move(expr));
  }

  std::vector<std::size_t> survivors;
  for (std::size_t k = 0; k < l; ++k)
    if (!bs.count(k)) survivors.push_back(k);
  if (survivors.size() != 2)
    throw InternalError("monomial elimination left " + std::to_string(survivors.size()) +
                        " facet classes instead of 2");
  if (!fd.survivor_names.empty() && fd.survivor_names.size() != survivors.size())
    throw ValidationError("frame names " + std::to_string(fd.survivor_names.size()) +
                          " survivors, reduction found " + std::to_string(survivors.size()));
  std::map<std::size_t, std::size_t> slot_of;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < survivors.size(); ++k) {
    slot_of[survivors[k]] = k;
    names.push_back(facet_var_name(fd, k, survivors[k]));
  }

  // Stage two: each additive row becomes a generator.  Rows are written in
  // the frame variables Z_k = s^{-sigma_k} v_k, sign-normalized, cleared of
  // monomial factors, then scaled by the frame's rule.
  const std::vector<SymExp>& eta = p.sym_supports;
  struct RowGen {
    std::size_t row;
    SPoly g;
    Rational unit_coef;
    SymExp unit_exp;
    std::vector<int> clear;
  };
  std::vector<RowGen> rgens;
  for (std::size_t r = 0; r < 2; ++r) {
    SPoly g;
    for (std::size_t i = 0; i < l; ++i) {
      const Integer& a = pres.additive[r][i];
      if (a == 0) continue;
      std::map<std::size_t, int> expo;
      if (slot_of.count(i)) {
        expo = {{i, 1}};
      } else {
        expo = bs.at(i);
      }
      SymExp h = eta[i];
      ExpVec mono(survivors.size(), 0);
      for (const auto& [k, e] : expo) {
        h += fd.sigma[k] * Rational(e);
        mono[slot_of.at(k)] += e;
      }
      g.add_term(mono, h, Rational(a));
    }
    if (g.is_zero()) throw InternalError("additive row " + std::to_string(r) + " vanished");
    RowGen rg;
    rg.row = r;
    rg.unit_coef = sp_sign_normalize(g);
    rg.clear = sp_clear(g);
    if (fd.scale == GenScale::Monic) {
      const SCoef& lead = g.t.rbegin()->second;
      if (lead.size() == 1) {
        const auto& [h0, r0] = *lead.begin();
        rg.unit_exp = -h0;
        rg.unit_coef *= Rational(1) / r0;
        sp_scale(g, -h0, Rational(1) / r0);
      }
    } else {
      auto it = g.t.find(ExpVec(survivors.size(), 0));
      if (it != g.t.end() && it->second.size() == 1) {
        const auto& [h0, r0] = *it->second.begin();
        rg.unit_exp = -h0;
        rg.unit_coef *= Rational(-1) / r0;
        sp_scale(g, -h0, Rational(-1) / r0);
      }
    }
    rg.g = std::move(g);
    rgens.push_back(std::move(rg));
  }

  // Stage three: if the top generator (by leading monomial) is linear in a
  // variable with a one-term coefficient, solve for that variable and push
  // the result through the other generator.  Otherwise both stay.
  std::vector<std::size_t> order{0, 1};
  if (sp_before(rgens[1].g, rgens[0].g)) order = {1, 0};

  struct Elim {
    std::size_t used;
    std::size_t slot;
    SPoly expr;
    SPoly result;
    std::vector<int> clear;
    Rational sign;
  };
  std::optional<Elim> elim;
  for (std::size_t oi = 0; oi < order.size() && !elim; ++oi) {
    const SPoly& g = rgens[order[oi]].g;
    for (std::size_t sl = survivors.size(); sl-- > 0 && !elim;) {
      if (g.max_exp(sl) != 1) continue;
      SPoly C, D;
      for (const auto& [m, c] : g.t) {
        ExpVec base = m;
        base[sl] = 0;
        if (m[sl] == 1)
          C.t.emplace(base, c);
        else
          D.t.emplace(base, c);
      }
      if (C.t.size() != 1 || C.t.begin()->second.size() != 1) continue;
      const ExpVec& cm = C.t.begin()->first;
      const auto& [ch, cr] = *C.t.begin()->second.begin();
      SPoly expr;  // the eliminated variable equals -D / C
      for (const auto& [m, c] : D.t) {
        ExpVec e = m;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] -= cm[k];
        for (const auto& [h, r] : c) expr.add_term(e, h - ch, -r / cr);
      }
      Elim el;
      el.used = order[oi];
      el.slot = sl;
      el.expr = expr;
      el.result = sp_substitute(rgens[order[oi] == 0 ? 1 : 0].g, sl, expr, survivors.size());
      if (el.result.is_zero())
        throw InternalError("elimination annihilated the other generator");
      el.sign = sp_sign_normalize(el.result);
      el.clear = sp_clear(el.result);
      elim = std::move(el);
    }
  }

  // Express every exponent in the declared (or derived) parameters, with one
  // global offset shared by the generators.
  std::vector<SymExp> all_exps;
  auto collect = [&all_exps](const SPoly& g) {
    for (const auto& [m, c] : g.t)
      for (const auto& [h, r] : c) all_exps.push_back(h);
  };
  collect(rgens[0].g);
  collect(rgens[1].g);
  if (elim) collect(elim->result);
  std::vector<VarDecl> params = fd.out_params;
  if (params.empty()) {
    // The elimination expression's exponents are differences and sit in the
    // lattice automatically, but they do sharpen the derived denominator.
    std::vector<SymExp> probe = all_exps;
    if (elim)
      for (const auto& [m, c] : elim->expr.t)
        for (const auto& [h, r] : c) probe.push_back(h);
    params = derive_params(probe);
  }
  ExpLattice lat(params);
  Rational t = lat.solve_offset(all_exps);

  ReducedPresentation red;
  red.sys = build_out_system(names, lat);
  red.vars = names;
  red.surviving_facets = survivors;
  red.dependent = std::move(dependent);
  red.global_unit = SymExp::constant(t);
  for (const auto& [v, expr] : bs) {
    MonomialBacksub b;
    b.facet = v;
    b.expo = expr;
    red.backsubs.push_back(std::move(b));
  }
  for (const RowGen& rg : rgens) {
    std::map<std::string, int> cl;
    for (std::size_t k = 0; k < rg.clear.size(); ++k)
      if (rg.clear[k] != 0) cl[names[k]] = rg.clear[k];
    red.rows.push_back(RowReduction{rg.row, rg.unit_coef, rg.unit_exp - SymExp::constant(t),
                                    std::move(cl), to_mpoly_exp(red.sys, lat, names, rg.g, t)});
  }
  if (elim) {
    red.kind = ReducedPresentation::Kind::Univariate;
    red.vars = {names[elim->slot == 0 ? 1 : 0]};
    red.generators.push_back(to_mpoly_exp(red.sys, lat, names, elim->result, t));
    std::map<std::string, int> cl;
    for (std::size_t k = 0; k < elim->clear.size(); ++k)
      if (elim->clear[k] != 0) cl[names[k]] = elim->clear[k];
    red.elim = ElimStep{names[elim->slot],
                        to_mpoly_exp(red.sys, lat, names, elim->expr, Rational(0)), elim->used,
                        std::move(cl), elim->sign};
  } else {
    red.kind = ReducedPresentation::Kind::BivariateIdeal;
    red.generators.push_back(red.rows[order[0]].generator);
    red.generators.push_back(red.rows[order[1]].generator);
  }
  verify_reduction(pres, frame, red);
  return red;
}

ReducedPresentation reduce(const ToricModel& m, bool nonminimal_d) {
  classify_fano(m.polytope);
  if (m.polytope.size() == 3) return reduce_triangle(m.polytope, m.frame);
  return reduce(presentation(m.polytope, nonminimal_d), m.frame);
}

ReducedPresentation reduce(const MomentPolytope& p, bool nonminimal_d) {
  classify_fano(p);
  if (p.size() == 3) return reduce_triangle(p, ReductionFrame{});
  return reduce(presentation(p, nonminimal_d), ReductionFrame{});
}

UniPoly ReducedPresentation::quotient() const {
  if (kind != Kind::Univariate)
    throw ValidationError("the presentation kept two variables; there is no one-variable quotient");
  std::vector<std::size_t> drop;
  for (std::size_t k = 0; k < sys->size(); ++k)
    if (sys->var(k).ring_var) drop.push_back(k);
  auto [qsys, remap] = sys->without(drop);
  return as_unipoly(generators.at(0), vars.at(0)).map_onto(qsys);
}

MPoly unit_monomial(const ParamSystemPtr& sys, const SymExp& h) {
  std::vector<VarDecl> params;
  for (const VarDecl& d : sys->vars())
    if (!d.ring_var && d.meaning) params.push_back(d);
  ExpLattice lat(params);
  std::vector<int> k = lat.monomial(h, Rational(0));
  std::map<std::string, int> e;
  for (std::size_t j = 0; j < params.size(); ++j)
    if (k[j] != 0) e[params[j].name] = k[j];
  return MPoly::monomial(sys, Rational(1), e);
}

void verify_reduction(const QHPresentation& pres, const ReductionFrame& frame,
                      const ReducedPresentation& red) {
  const MomentPolytope& p = pres.polytope;
  const std::size_t l = p.size();
  FrameData fd = resolve_frame(p, frame);
  const ParamSystemPtr& sys = red.sys;

  // Laurent-monomial value of every facet class in the output variables; the
  // survivor-ordinal -> name map comes from the system's ring variables.
  std::map<std::size_t, MPoly> v_val;
  std::map<std::size_t, std::string> var_of;
  std::vector<std::string> slot_names;
  for (const VarDecl& d : sys->vars())
    if (d.ring_var) slot_names.push_back(d.name);
  if (slot_names.size() != red.surviving_facets.size())
    throw InternalError("output system does not declare one variable per survivor");
  for (std::size_t k = 0; k < red.surviving_facets.size(); ++k) {
    var_of[red.surviving_facets[k]] = slot_names[k];
    v_val.emplace(red.surviving_facets[k], MPoly::variable(sys, slot_names[k]));
  }
  for (const MonomialBacksub& b : red.backsubs) {
    if (!b.s_exp.is_zero())
      throw InternalError("back-substitution for facet " + std::to_string(b.facet + 1) +
                          " kept a unit factor");
    MPoly m = MPoly::constant(sys, Rational(1));
    for (const auto& [k, e] : b.expo) {
      auto it = v_val.find(k);
      if (it == v_val.end())
        throw InternalError("back-substitution is not closed over the survivors");
      m = m * it->second.pow(e);
    }
    v_val.emplace(b.facet, std::move(m));
  }
  if (v_val.size() != l) throw InternalError("some facet class has no back-substitution");

  // Every multiplicative relation must cancel identically.
  for (const QuantumRelation& rel : pres.relations) {
    MPoly lhs = v_val.at(rel.pair.i) * v_val.at(rel.pair.j);
    MPoly rhs = MPoly::constant(sys, Rational(1));
    for (std::size_t m = 0; m < l; ++m)
      if (rel.rhs[m] != 0) rhs = rhs * v_val.at(m).pow(to_long(rel.rhs[m]));
    if (lhs != rhs)
      throw InternalError("relation of pair " + pair_str(rel.pair.i, rel.pair.j) +
                          " does not cancel after back-substitution");
  }

  // Each additive row must reproduce its recorded generator after the frame
  // rescaling, the clearing monomial and the unit.
  const std::vector<SymExp>& eta = p.sym_supports;
  for (const RowReduction& rr : red.rows) {
    MPoly row = MPoly::zero(sys);
    for (std::size_t i = 0; i < l; ++i) {
      const Integer& a = pres.additive[rr.row][i];
      if (a == 0) continue;
      std::map<std::size_t, int> expo =
          var_of.count(i) ? std::map<std::size_t, int>{{i, 1}} : [&]() {
            for (const MonomialBacksub& b : red.backsubs)
              if (b.facet == i) return b.expo;
            throw InternalError("missing back-substitution");
          }();
      SymExp h = eta[i];
      MPoly mono = MPoly::constant(sys, Rational(a));
      for (const auto& [k, e] : expo) {
        h += fd.sigma[k] * Rational(e);
        mono = mono * v_val.at(k).pow(e);
      }
      row += mono * unit_monomial(sys, h + rr.unit_exp);
    }
    MPoly clear = MPoly::monomial(sys, rr.unit_coef, rr.clear);
    if (row * clear != rr.generator)
      throw InternalError("row " + std::to_string(rr.row) +
                          " does not reproduce its recorded generator");
  }

  if (red.kind == ReducedPresentation::Kind::Univariate) {
    const ElimStep& st = *red.elim;
    std::size_t v = sys->require(st.var);
    const MPoly& used = red.rows.at(st.used).generator;
    const MPoly& other = red.rows.at(st.used == 0 ? 1 : 0).generator;

    auto split = [&](const MPoly& g, int k) {
      MPoly part = MPoly::zero(sys);
      for (const auto& [e, c] : g.terms()) {
        if (e.at(v) != k) continue;
        ExpVec e2 = e;
        e2[v] = 0;
        part += MPoly::monomial(sys, c, e2);
      }
      return part;
    };
    if (used.deg_in(v) != 1 || used.min_deg_in(v) != 0)
      throw InternalError("consumed generator is not linear in " + st.var);
    MPoly C = split(used, 1), D = split(used, 0);
    // (a) the expression really solves the consumed generator
    if (C * st.expr + D != MPoly::zero(sys))
      throw InternalError("elimination expression does not solve the consumed generator");
    // (b) the output generator is the other generator at var := expr, up to
    // the recorded monomial and sign
    if (other.min_deg_in(v) < 0)
      throw InternalError("other generator is not polynomial in " + st.var);
    MPoly sub = MPoly::zero(sys);
    for (int k = 0; k <= other.deg_in(v); ++k) sub += split(other, k) * st.expr.pow(k);
    MPoly clear = MPoly::monomial(sys, st.sign, st.clear);
    if (sub * clear != red.generators.at(0))
      throw InternalError("output generator does not match the eliminated combination");
    // (c) ideal membership certificate: other - sub is an exact multiple of
    // the consumed generator
    MPoly diff = other - sub;
    if (!diff.is_zero()) (void)diff.divexact(used);
  } else {
    if (red.generators.size() != 2)
      throw InternalError("two-variable reduction must keep two generators");
    for (const MPoly& g : red.generators) {
      bool found = false;
      for (const RowReduction& rr : red.rows) found = found || rr.generator == g;
      if (!found) throw InternalError("output generator is not one of the row generators");
    }
  }
}

}  // namespace qhtoric
