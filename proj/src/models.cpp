#include "qhtoric/models.hpp"

#include <utility>

#include "qhtoric/errors.hpp"

namespace qhtoric {

namespace {

using Params = std::map<std::string, Rational>;

Params merge_defaults(const std::string& model, const Params& given, const Params& defaults) {
  Params out = defaults;
  for (const auto& [k, v] : given) {
    if (!defaults.count(k))
      throw ValidationError("model " + model + " has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

void require(bool cond, const std::string& model, const std::string& constraint) {
  if (!cond)
    throw ValidationError("model " + model + " requires " + constraint);
}

SymExp sym(const std::string& name) { return SymExp::param(name); }
SymExp num(const Rational& c) { return SymExp::constant(c); }

VarDecl out_param(const std::string& name, const SymExp& meaning, const Params& values) {
  VarDecl d;
  d.name = name;
  d.ring_var = false;
  d.meaning = meaning;
  d.gamma = meaning.eval(values);
  return d;
}

// Installs symbolic supports, checking them against the numeric ones, and
// defaults sigma_i = -support_i when the frame declares nothing else.
void finish(ToricModel& m, std::vector<SymExp> sym_supports) {
  if (sym_supports.size() != m.polytope.size())
    throw InternalError("model " + m.name + ": support count mismatch");
  for (std::size_t i = 0; i < sym_supports.size(); ++i) {
    if (sym_supports[i].eval(m.params) != m.polytope.supports[i])
      throw InternalError("model " + m.name + ": symbolic support mismatch at facet " +
                          std::to_string(i));
  }
  m.polytope.sym_supports = std::move(sym_supports);
  if (m.frame.sigma.empty())
    for (const SymExp& eta : m.polytope.sym_supports) m.frame.sigma.push_back(-eta);
}

ToricModel make_cp2(const Params& given) {
  Params p = merge_defaults("cp2", given, {{"lambda", Rational(1)}});
  const Rational &L = p.at("lambda");
  require(L > 0, "cp2", "lambda > 0");
  ToricModel m;
  m.name = "cp2";
  m.params = p;
  m.polytope = build_polytope({{Rational(0), Rational(0)}, {Rational(0), L}, {L, Rational(0)}});
  m.frame.survivor_names = {"X"};
  m.frame.scale = GenScale::Monic;
  m.frame.out_params = {out_param("s_lambda", sym("lambda"), p)};
  finish(m, {num(0), -sym("lambda"), num(0)});
  return m;
}

ToricModel make_cp2_bl1(const Params& given) {
  Params p = merge_defaults("cp2-bl1", given, {{"lambda", Rational(1)}, {"rho", Rational(1, 2)}});
  const Rational &L = p.at("lambda"), &R = p.at("rho");
  require(R > 0, "cp2-bl1", "rho > 0");
  require(R < L, "cp2-bl1", "rho < lambda");
  Rational c = L - R;
  ToricModel m;
  m.name = "cp2-bl1";
  m.params = p;
  m.polytope = build_polytope({{Rational(0), c}, {R, c}, {L, Rational(0)}, {Rational(0), Rational(0)}});
  m.frame.survivor_names = {"X", "Y"};
  m.frame.scale = GenScale::ConstantMinusOne;
  m.frame.out_params = {out_param("s_lambda", sym("lambda"), p), out_param("s_rho", sym("rho"), p)};
  finish(m, {sym("rho") - sym("lambda"), -sym("lambda"), num(0), num(0)});
  return m;
}

ToricModel make_cp2_bl2(const Params& given) {
  Params p = merge_defaults("cp2-bl2", given, {{"eps", Rational(2, 3)}, {"delta", Rational(2, 3)}});
  const Rational &E = p.at("eps"), &D = p.at("delta");
  require(E > 0 && E < 1, "cp2-bl2", "eps in (0,1)");
  require(D > 0 && D < 1, "cp2-bl2", "delta in (0,1)");
  require(E + D > 1, "cp2-bl2", "eps + delta > 1");
  ToricModel m;
  m.name = "cp2-bl2";
  m.params = p;
  m.polytope = build_polytope({{Rational(0), E},
                               {Rational(1) - E, E},
                               {D, Rational(1) - D},
                               {D, Rational(0)},
                               {Rational(0), Rational(0)}});
  m.frame.survivor_names = {"X", "Y"};
  m.frame.scale = GenScale::ConstantMinusOne;
  m.frame.out_params = {out_param("s", num(1), p), out_param("s_eps", sym("eps"), p),
                        out_param("s_delta", sym("delta"), p)};
  finish(m, {-sym("eps"), num(-1), -sym("delta"), num(0), num(0)});
  return m;
}

ToricModel make_cp2_bl3(const Params& given) {
  Params p = merge_defaults(
      "cp2-bl3", given,
      {{"alpha", Rational(1, 4)}, {"beta", Rational(2, 3)}, {"gamma", Rational(2, 3)}});
  const Rational &A = p.at("alpha"), &B = p.at("beta"), &G = p.at("gamma");
  require(A > 0 && A < 1, "cp2-bl3", "alpha in (0,1)");
  require(B > 0 && B < 1, "cp2-bl3", "beta in (0,1)");
  require(G > 0 && G < 1, "cp2-bl3", "gamma in (0,1)");
  require(A < G, "cp2-bl3", "alpha < gamma");
  require(A < B, "cp2-bl3", "alpha < beta");
  require(B + G > 1, "cp2-bl3", "beta + gamma > 1");
  ToricModel m;
  m.name = "cp2-bl3";
  m.params = p;
  m.polytope = build_polytope({{Rational(0), G},
                               {Rational(1) - G, G},
                               {B, Rational(1) - B},
                               {B, Rational(0)},
                               {A, Rational(0)},
                               {Rational(0), A}});
  m.frame.sigma.assign(6, num(Rational(1, 3)));
  m.frame.survivor_names = {"A", "B"};
  m.frame.scale = GenScale::Monic;
  m.frame.out_params = {out_param("x", num(Rational(2, 3)) - sym("gamma"), p),
                        out_param("y", num(Rational(2, 3)) - sym("beta"), p),
                        out_param("z", sym("alpha") - num(Rational(1, 3)), p)};
  finish(m, {-sym("gamma"), num(-1), -sym("beta"), num(0), sym("alpha"), num(0)});
  return m;
}

ToricModel make_s2xs2(const Params& given) {
  Params p = merge_defaults("s2xs2", given, {{"a", Rational(1)}, {"b", Rational(1)}});
  const Rational &A = p.at("a"), &B = p.at("b");
  require(A > 0, "s2xs2", "a > 0");
  require(B > 0, "s2xs2", "b > 0");
  ToricModel m;
  m.name = "s2xs2";
  m.params = p;
  m.polytope = build_polytope(
      {{Rational(0), B}, {A, B}, {A, Rational(0)}, {Rational(0), Rational(0)}});
  m.frame.survivor_names = {"A", "B"};
  m.frame.scale = GenScale::Monic;
  m.frame.out_params = {out_param("s_a", sym("a"), p), out_param("s_b", sym("b"), p)};
  finish(m, {-sym("b"), -sym("a"), num(0), num(0)});
  return m;
}

}  // namespace

ToricModel standard_model(const std::string& name, std::map<std::string, Rational> params) {
  if (name == "cp2") return make_cp2(params);
  if (name == "cp2-bl1") return make_cp2_bl1(params);
  if (name == "cp2-bl2") return make_cp2_bl2(params);
  if (name == "cp2-bl3") return make_cp2_bl3(params);
  if (name == "s2xs2") return make_s2xs2(params);
  throw ValidationError("unknown model '" + name + "' (known: cp2, cp2-bl1, cp2-bl2, cp2-bl3, s2xs2)");
}

ToricModel standard_model(FanoTag tag, std::map<std::string, Rational> params) {
  switch (tag) {
    case FanoTag::CP2: return make_cp2(params);
    case FanoTag::CP2Bl1: return make_cp2_bl1(params);
    case FanoTag::CP2Bl2: return make_cp2_bl2(params);
    case FanoTag::CP2Bl3: return make_cp2_bl3(params);
    case FanoTag::S2xS2: return make_s2xs2(params);
  }
  throw InternalError("unknown tag");
}

std::vector<std::string> standard_model_names() {
  return {"cp2", "cp2-bl1", "cp2-bl2", "cp2-bl3", "s2xs2"};
}

}  // namespace qhtoric
