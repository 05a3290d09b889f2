#include "qhtoric/json_io.hpp"

#include <fstream>

#include "qhtoric/errors.hpp"

namespace qhtoric {

Json json_of(const Rational& r) { return rat_str(r); }

Json json_of(const Integer& n) { return n.get_str(); }

Json json_of(const SymExp& e) {
  Json j = Json::object();
  j["const"] = rat_str(e.constant_part());
  for (const auto& [name, coef] : e.coeffs()) j[name] = rat_str(coef);
  return j;
}

Json json_of(const ParamSystemPtr& sys) {
  Json vars = Json::array();
  for (const VarDecl& d : sys->vars()) {
    Json v;
    v["name"] = d.name;
    v["ring"] = d.ring_var;
    if (d.meaning) v["meaning"] = json_of(*d.meaning);
    if (d.gamma) v["gamma"] = rat_str(*d.gamma);
    vars.push_back(std::move(v));
  }
  Json rels = Json::array();
  for (const VarRelation& r : sys->relations()) {
    Json target = Json::object();
    for (const auto& [v, e] : r.target) target[sys->var(v).name] = e;
    rels.push_back(Json{{"var", sys->var(r.var).name}, {"target", std::move(target)}});
  }
  return Json{{"vars", std::move(vars)}, {"relations", std::move(rels)}};
}

Json json_of(const MPoly& p) { return p.str(); }

Json json_of(const FieldElem& c) {
  if (c.is_polynomial()) return c.num().str();
  return Json{{"num", c.num().str()}, {"den", c.den().str()}};
}

Json json_of(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const FieldElem& c : p.coeffs()) coeffs.push_back(json_of(c));
  return Json{{"var", p.var()}, {"coeffs", std::move(coeffs)}};
}

namespace {

Json pair_json(const Rational& x, const Rational& y) {
  return Json::array({rat_str(x), rat_str(y)});
}

Json pair_json(const Vec2Z& v) { return Json::array({v.x.get_str(), v.y.get_str()}); }

template <class T>
Json list_json(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const T& x : xs) a.push_back(json_of(x));
  return a;
}

Json size_list_json(const std::vector<std::size_t>& xs) {
  Json a = Json::array();
  for (std::size_t x : xs) a.push_back(x);
  return a;
}

}  // namespace

Json json_of(const MomentPolytope& p) {
  Json verts = Json::array(), normals = Json::array();
  for (const Vec2Q& v : p.vertices) verts.push_back(pair_json(v.x, v.y));
  for (const Vec2Z& n : p.normals) normals.push_back(pair_json(n));
  return Json{{"vertices", std::move(verts)},
              {"normals", std::move(normals)},
              {"supports", list_json(p.supports)},
              {"sym_supports", list_json(p.sym_supports)}};
}

Json json_of(const DelzantReport& r) {
  return Json{{"smooth", r.smooth},
              {"corner_dets", list_json(r.corner_dets)},
              {"bad_vertices", size_list_json(r.bad_vertices)}};
}

Json json_of(const FanoReport& r) { return Json{{"fano", r.fano}, {"reason", r.reason}}; }

Json json_of(const Classification& c) {
  Json u = Json::array();
  for (const Integer& e : c.u) u.push_back(e.get_str());
  return Json{{"tag", tag_name(c.tag)},
              {"u", std::move(u)},
              {"shift", c.shift},
              {"reversed", c.reversed}};
}

Json json_of(const QuantumRelation& r) {
  Json pair{{"i", r.pair.i},
            {"j", r.pair.j},
            {"w", pair_json(r.pair.w)},
            {"J", size_list_json(r.pair.J)},
            {"c", list_json(r.pair.c)}};
  return Json{{"pair", std::move(pair)},
              {"d", list_json(r.d)},
              {"s_exp", json_of(r.s_exp)},
              {"s_exp_value", rat_str(r.s_exp_value)},
              {"q_exp", r.q_exp},
              {"rhs", list_json(r.rhs)}};
}

Json json_of(const QHPresentation& p) {
  return Json{{"polytope", json_of(p.polytope)},
              {"relations", list_json(p.relations)},
              {"additive", Json::array({list_json(p.additive[0]), list_json(p.additive[1])})},
              {"v_exp", list_json(p.v_exp)}};
}

Json json_of(const ReducedPresentation& r) {
  Json j;
  j["kind"] = r.kind == ReducedPresentation::Kind::Univariate ? "univariate" : "bivariate-ideal";
  j["system"] = json_of(r.sys);
  j["vars"] = r.vars;
  j["surviving_facets"] = size_list_json(r.surviving_facets);
  j["generators"] = list_json(r.generators);

  Json backsubs = Json::array();
  for (const MonomialBacksub& b : r.backsubs) {
    Json expo = Json::object();
    for (const auto& [facet, e] : b.expo) expo[std::to_string(facet)] = e;
    backsubs.push_back(
        Json{{"facet", b.facet}, {"s_exp", json_of(b.s_exp)}, {"expo", std::move(expo)}});
  }
  j["backsubs"] = std::move(backsubs);
  j["dependent"] = size_list_json(r.dependent);

  Json rows = Json::array();
  for (const RowReduction& row : r.rows) {
    Json clear = Json::object();
    for (const auto& [name, e] : row.clear) clear[name] = e;
    rows.push_back(Json{{"row", row.row},
                        {"unit_coef", rat_str(row.unit_coef)},
                        {"unit_exp", json_of(row.unit_exp)},
                        {"clear", std::move(clear)},
                        {"generator", row.generator.str()}});
  }
  j["rows"] = std::move(rows);

  if (r.elim) {
    Json clear = Json::object();
    for (const auto& [name, e] : r.elim->clear) clear[name] = e;
    j["elim"] = Json{{"var", r.elim->var},
                     {"expr", r.elim->expr.str()},
                     {"used", r.elim->used},
                     {"clear", std::move(clear)},
                     {"sign", rat_str(r.elim->sign)}};
  }
  j["global_unit"] = json_of(r.global_unit);
  return j;
}

Json json_of(const FDAlgebra& a) {
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(list_json(a.product(i, j)));
    table.push_back(std::move(row));
  }
  return Json{{"system", json_of(a.system())},
              {"basis", a.basis()},
              {"table", std::move(table)},
              {"unity", list_json(a.unity())}};
}

namespace {

Json point_json(const std::map<std::string, Rational>& pt) {
  Json j = Json::object();
  for (const auto& [name, v] : pt) j[name] = rat_str(v);
  return j;
}

Json witness_json(const NonzeroWitness& w) {
  Json mult = Json::array();
  for (long m : w.mult) mult.push_back(m);
  return Json{{"label", w.label},
              {"quantity", w.quantity.str()},
              {"units", list_json(w.units)},
              {"mult", std::move(mult)},
              {"reduced", w.reduced.str()},
              {"point", point_json(w.point)},
              {"value", rat_str(w.value)}};
}

}  // namespace

Json json_of(const Certificate& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  Json nz = Json::array();
  for (const NonzeroWitness& w : c.nonzero) nz.push_back(witness_json(w));
  j["nonzero"] = std::move(nz);
  if (c.nilpotent)
    j["nilpotent"] = Json{{"modulus", json_of(c.nilpotent->modulus)},
                          {"element", json_of(c.nilpotent->element)},
                          {"power", c.nilpotent->power}};
  if (c.summand)
    j["summand"] = Json{{"modulus", json_of(c.summand->modulus)},
                        {"part", json_of(c.summand->part)},
                        {"complement", json_of(c.summand->complement)},
                        {"bezout_u", json_of(c.summand->bezout_u)},
                        {"bezout_v", json_of(c.summand->bezout_v)},
                        {"sf_u", json_of(c.summand->sf_u)},
                        {"sf_v", json_of(c.summand->sf_v)},
                        {"idempotent", json_of(c.summand->idempotent)}};
  if (c.nilpotent_vec)
    j["nilpotent_vec"] =
        Json{{"coords", list_json(c.nilpotent_vec->first)}, {"power", c.nilpotent_vec->second}};
  if (c.idempotent_vec) j["idempotent_vec"] = list_json(*c.idempotent_vec);
  j["unresolved"] = list_json(c.unresolved);
  return j;
}

Json json_of(const BlowupAlgebra& a) {
  return Json{{"n", a.n},
              {"system", json_of(a.sys)},
              {"quotient", json_of(a.quotient)},
              {"a", json_of(a.a_elem)},
              {"b", json_of(a.b_elem)}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Rational rational_from(const Json& j) {
  if (!j.is_string()) bad("rational values are \"p/q\" strings");
  return rat_parse(j.get<std::string>());
}

Integer integer_from(const Json& j) {
  if (!j.is_string()) bad("integer values are decimal strings");
  try {
    return Integer(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    bad("malformed integer '" + j.get<std::string>() + "'");
  }
}

SymExp symexp_from(const Json& j) {
  if (!j.is_object()) bad("symbolic exponents are objects");
  SymExp e;
  for (const auto& [key, val] : j.items()) {
    if (!val.is_string()) bad("exponent coefficients are \"p/q\" strings");
    Rational c = rat_parse(val.get<std::string>());
    e += key == "const" ? SymExp::constant(c) : SymExp::param(key, c);
  }
  return e;
}

ParamSystemPtr system_from(const Json& j) {
  ParamSystem::Builder b;
  const Json& vars = field(j, "vars");
  if (!vars.is_array() || vars.empty()) bad("a system needs a nonempty vars array");
  for (const Json& v : vars) {
    VarDecl d;
    d.name = str_field(v, "name");
    d.ring_var = field(v, "ring").get<bool>();
    if (v.contains("meaning")) d.meaning = symexp_from(v.at("meaning"));
    if (v.contains("gamma")) d.gamma = rational_from(v.at("gamma"));
    b.add_decl(d);
  }
  if (j.contains("relations"))
    for (const Json& r : j.at("relations")) {
      std::map<std::string, int> target;
      for (const auto& [name, e] : field(r, "target").items()) target[name] = e.get<int>();
      b.add_relation(str_field(r, "var"), target);
    }
  return b.build();
}

MPoly mpoly_from(const ParamSystemPtr& sys, const Json& j) {
  if (!j.is_string()) bad("polynomials are canonical text strings");
  return MPoly::parse(sys, j.get<std::string>());
}

FieldElem fieldelem_from(const ParamSystemPtr& sys, const Json& j) {
  if (j.is_string()) return FieldElem(MPoly::parse(sys, j.get<std::string>()));
  return FieldElem(mpoly_from(sys, field(j, "num")), mpoly_from(sys, field(j, "den")));
}

namespace {

Vec2Z vec2z_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("lattice vectors are [x, y] pairs");
  return Vec2Z{integer_from(j.at(0)), integer_from(j.at(1))};
}

std::vector<Integer> integers_from(const Json& j) {
  std::vector<Integer> out;
  for (const Json& e : j) out.push_back(integer_from(e));
  return out;
}

std::vector<std::size_t> sizes_from(const Json& j) {
  std::vector<std::size_t> out;
  for (const Json& e : j) out.push_back(e.get<std::size_t>());
  return out;
}

MomentPolytope stored_polytope_from(const Json& j) {
  MomentPolytope p;
  for (const Json& v : field(j, "vertices")) {
    if (!v.is_array() || v.size() != 2) bad("vertices are [x, y] pairs");
    p.vertices.push_back(Vec2Q{rational_from(v.at(0)), rational_from(v.at(1))});
  }
  for (const Json& n : field(j, "normals")) p.normals.push_back(vec2z_from(n));
  for (const Json& s : field(j, "supports")) p.supports.push_back(rational_from(s));
  for (const Json& s : field(j, "sym_supports")) p.sym_supports.push_back(symexp_from(s));
  if (p.normals.size() != p.vertices.size() || p.supports.size() != p.vertices.size() ||
      p.sym_supports.size() != p.vertices.size())
    bad("polytope sections disagree on the facet count");
  return p;
}

}  // namespace

QHPresentation presentation_from(const Json& j) {
  QHPresentation pres;
  pres.polytope = stored_polytope_from(field(j, "polytope"));
  for (const Json& r : field(j, "relations")) {
    QuantumRelation rel;
    const Json& pair = field(r, "pair");
    rel.pair.i = field(pair, "i").get<std::size_t>();
    rel.pair.j = field(pair, "j").get<std::size_t>();
    rel.pair.w = vec2z_from(field(pair, "w"));
    rel.pair.J = sizes_from(field(pair, "J"));
    rel.pair.c = integers_from(field(pair, "c"));
    rel.d = integers_from(field(r, "d"));
    rel.s_exp = symexp_from(field(r, "s_exp"));
    rel.s_exp_value = rational_from(field(r, "s_exp_value"));
    rel.q_exp = field(r, "q_exp").get<long>();
    rel.rhs = integers_from(field(r, "rhs"));
    pres.relations.push_back(std::move(rel));
  }
  const Json& add = field(j, "additive");
  if (!add.is_array() || add.size() != 2) bad("additive must hold exactly two rows");
  pres.additive[0] = integers_from(add.at(0));
  pres.additive[1] = integers_from(add.at(1));
  for (const Json& e : field(j, "v_exp")) pres.v_exp.push_back(symexp_from(e));
  return pres;
}

FDAlgebra algebra_from(const Json& j) {
  ParamSystemPtr sys = system_from(field(j, "system"));
  std::vector<std::string> basis;
  for (const Json& b : field(j, "basis")) {
    if (!b.is_string()) bad("basis labels are strings");
    basis.push_back(b.get<std::string>());
  }
  const std::size_t n = basis.size();

  auto coords_from = [&](const Json& row) {
    if (!row.is_array() || row.size() != n) bad("coordinate vectors must have the basis length");
    std::vector<FieldElem> out;
    out.reserve(n);
    for (const Json& e : row) out.push_back(fieldelem_from(sys, e));
    return out;
  };

  const Json& table = field(j, "table");
  if (!table.is_array() || table.size() != n) bad("table must be dim x dim x dim");
  std::vector<std::vector<std::vector<FieldElem>>> t;
  t.reserve(n);
  for (const Json& row : table) {
    if (!row.is_array() || row.size() != n) bad("table must be dim x dim x dim");
    std::vector<std::vector<FieldElem>> r;
    r.reserve(n);
    for (const Json& cell : row) r.push_back(coords_from(cell));
    t.push_back(std::move(r));
  }
  return FDAlgebra(sys, std::move(basis), std::move(t), coords_from(field(j, "unity")));
}

std::vector<Vec2Q> vertices_from(const Json& j) {
  std::vector<Vec2Q> out;
  for (const Json& v : field(j, "vertices")) {
    if (!v.is_array() || v.size() != 2) bad("vertices are [x, y] pairs");
    out.push_back(Vec2Q{rational_from(v.at(0)), rational_from(v.at(1))});
  }
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("parse error in '" + path + "': " + e.what());
  }
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (is_scalar(val)) {
        std::string s = scalar_str(val);
        out += indent + key + ":" + (s.empty() ? "" : " " + s) + "\n";
      } else if (val.empty()) {
        out += indent + key + ": " + (val.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += indent + key + ":\n";
        render(val, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    for (const Json& val : j) {
      if (is_scalar(val)) {
        out += indent + "- " + scalar_str(val) + "\n";
      } else {
        out += indent + "-\n";
        render(val, indent + "  ", out);
      }
    }
  } else {
    out += indent + scalar_str(j) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, "", out);
  return out;
}

}  // namespace qhtoric
