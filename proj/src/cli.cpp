#include "qhtoric/cli.hpp"

#include <algorithm>
#include <set>

#include "qhtoric/errors.hpp"
#include "qhtoric/models.hpp"
#include "qhtoric/products.hpp"
#include "qhtoric/radical.hpp"

namespace qhtoric {

const char* check_name(Check c) {
  switch (c) {
    case Check::Validate:
      return "validate";
    case Check::Classify:
      return "classify";
    case Check::Presentation:
      return "presentation";
    case Check::Reduce:
      return "reduce";
    case Check::Semisimple:
      return "semisimple";
    case Check::FieldSummand:
      return "field-summand";
  }
  return "?";
}

Check parse_check(const std::string& text) {
  for (Check c : {Check::Validate, Check::Classify, Check::Presentation, Check::Reduce,
                  Check::Semisimple, Check::FieldSummand})
    if (text == check_name(c)) return c;
  throw ValidationError("unknown check '" + text + "'");
}

std::vector<Check> close_checks(const std::vector<Check>& checks) {
  std::set<int> have;
  for (Check c : checks) {
    // every stage needs everything before it, except that the two verdict
    // checks are siblings on top of the reduction
    switch (c) {
      case Check::FieldSummand:
      case Check::Semisimple:
        have.insert(static_cast<int>(Check::Reduce));
        [[fallthrough]];
      case Check::Reduce:
        have.insert(static_cast<int>(Check::Presentation));
        [[fallthrough]];
      case Check::Presentation:
        have.insert(static_cast<int>(Check::Classify));
        [[fallthrough]];
      case Check::Classify:
        have.insert(static_cast<int>(Check::Validate));
        [[fallthrough]];
      case Check::Validate:
        have.insert(static_cast<int>(c));
    }
  }
  std::vector<Check> out;
  for (int c : have) out.push_back(static_cast<Check>(c));
  return out;
}

std::string RunReport::rendered(RunConfig::Emit emit) const {
  if (emit == RunConfig::Emit::Json) return body.dump(2) + "\n";
  return render_text(body);
}

namespace {

void require_reverified(const Certificate& cert, const char* what) {
  if (!reverify(cert))
    throw InternalError(std::string(what) + ": certificate failed re-verification");
}

// The two-generator reductions split into the separated case (each generator
// univariate in its own variable, so both are trivially ideal members) and
// the coupled case, which needs the derived member chain per regime.
Json radical_section(const RunConfig& cfg, const ReducedPresentation& red, RunStatus& status) {
  ParamRegime regime = parse_regime(cfg.relations);
  const MPoly& g1 = red.generators.at(0);
  const MPoly& g2 = red.generators.at(1);
  std::size_t v1 = red.sys->require(red.vars.at(0));
  std::size_t v2 = red.sys->require(red.vars.at(1));

  Json j;
  Certificate cert;
  if (!g1.depends_on(v2) && !g2.depends_on(v1)) {
    if (regime != ParamRegime::Generic)
      throw ValidationError("--relations applies to the coupled two-variable reduction only");
    MembershipCert m1{as_unipoly(g1, red.vars[0]), MPoly::constant(red.sys, 1),
                      MPoly::zero(red.sys)};
    MembershipCert m2{as_unipoly(g2, red.vars[1]), MPoly::zero(red.sys),
                      MPoly::constant(red.sys, 1)};
    cert = seidenberg_radical_check(g1, g2, m1, m2);
    j["route"] = "separated-variables";
  } else {
    CaseMembers cm = derive_case_members(red, regime);
    cert = radical_case_certificate(cm);
    j["route"] = "member-chain";
    j["members"] = Json{{"first", json_of(cm.in_first.poly)}, {"second", json_of(cm.in_second.poly)}};
  }
  j["regime"] = regime_name(regime);
  require_reverified(cert, "radical check");
  if (cert.verdict == Verdict::Inconclusive) status = RunStatus::Inconclusive;
  j["certificate"] = json_of(cert);
  return j;
}

RunReport run_pipeline(const RunConfig& cfg) {
  RunReport rep;
  Json& j = rep.body;

  std::vector<Check> requested = cfg.checks.empty()
                                     ? std::vector<Check>{Check::Semisimple}
                                     : cfg.checks;
  const bool presentation_explicit =
      std::find(requested.begin(), requested.end(), Check::Presentation) != requested.end();
  std::vector<Check> checks = close_checks(requested);

  std::optional<ToricModel> model;
  std::optional<MomentPolytope> raw;
  if (cfg.command == Command::Model) {
    model = standard_model(cfg.model, cfg.params);
    j["command"] = "model";
    j["model"] = model->name;
    Json params = Json::object();
    for (const auto& [name, value] : model->params) params[name] = rat_str(value);
    j["params"] = std::move(params);
  } else {
    raw = build_polytope(vertices_from(load_json(cfg.input_path)));
    j["command"] = "polytope";
    j["file"] = cfg.input_path;
  }
  if (!cfg.relations.empty()) j["relations"] = cfg.relations;

  Json names = Json::array();
  for (Check c : checks) names.push_back(check_name(c));
  j["checks"] = std::move(names);

  const MomentPolytope& p = model ? model->polytope : *raw;
  std::optional<ReducedPresentation> red;

  for (Check c : checks) switch (c) {
      case Check::Validate:
        j["validate"] =
            Json{{"delzant", json_of(delzant_check(p))}, {"fano", json_of(fano_check(p))}};
        break;
      case Check::Classify:
        j["classify"] = json_of(classify_fano(p));
        break;
      case Check::Presentation:
        try {
          j["presentation"] = json_of(presentation(p, cfg.nonminimal_d));
        } catch (const UnsupportedModelError&) {
          // triangles reduce directly; only an explicit request fails
          if (presentation_explicit) throw;
          j["presentation"] = Json{{"skipped", "triangles reduce directly"}};
        }
        break;
      case Check::Reduce:
        red = model ? reduce(*model, cfg.nonminimal_d) : reduce(p, cfg.nonminimal_d);
        j["reduced"] = json_of(*red);
        break;
      case Check::Semisimple:
        if (red->kind == ReducedPresentation::Kind::Univariate) {
          if (!cfg.relations.empty())
            throw ValidationError("--relations applies to two-variable reductions only");
          Certificate cert = is_semisimple_univariate(red->quotient());
          require_reverified(cert, "semisimple check");
          if (cert.verdict == Verdict::Inconclusive) rep.status = RunStatus::Inconclusive;
          j["semisimple"] = Json{{"route", "resultant"}, {"certificate", json_of(cert)}};
        } else {
          j["semisimple"] = radical_section(cfg, *red, rep.status);
        }
        break;
      case Check::FieldSummand: {
        if (red->kind != ReducedPresentation::Kind::Univariate)
          throw ValidationError("field-summand check needs a one-variable reduction");
        Certificate cert = field_summand_certificate(red->quotient());
        require_reverified(cert, "field-summand check");
        if (cert.verdict == Verdict::Inconclusive) rep.status = RunStatus::Inconclusive;
        j["field_summand"] = json_of(cert);
        break;
      }
    }

  Json summary = Json::object();
  if (j.contains("semisimple"))
    summary["semisimple"] = j["semisimple"]["certificate"]["verdict"];
  if (j.contains("field_summand")) summary["field_summand"] = j["field_summand"]["verdict"];
  if (!summary.empty()) j["summary"] = std::move(summary);
  j["status"] = rep.status == RunStatus::Ok ? "ok" : "inconclusive";
  return rep;
}

RunReport run_blowup(const RunConfig& cfg) {
  BlowupAlgebra alg = blowup_algebra(cfg.blowup_n);
  BlowupReport br = analyze_blowup(alg);
  require_reverified(br.nilpotency, "blow-up nilpotency");
  require_reverified(br.field_summand, "blow-up field summand");
  if (!br.all_ok()) throw InternalError("blow-up analysis failed its own identities");

  RunReport rep;
  rep.body = Json{{"command", "blowup"},
                  {"n", cfg.blowup_n},
                  {"algebra", json_of(alg)},
                  {"products",
                   Json{{"defining_identities", br.products_ok},
                        {"b_squared_zero", br.b_squares_to_zero},
                        {"b_annihilates_summand", br.b_annihilates_summand},
                        {"lifts_in_a_squared", br.lifts_divisible},
                        {"idempotent_proper", br.idempotent_proper}}},
                  {"nilpotency", json_of(br.nilpotency)},
                  {"field_summand", json_of(br.field_summand)},
                  {"summary",
                   Json{{"nilpotency", verdict_name(br.nilpotency.verdict)},
                        {"field_summand", verdict_name(br.field_summand.verdict)}}},
                  {"status", "ok"}};
  return rep;
}

// Accepts a bare structure-constant table or a report embedding one: certify
// reports carry theirs under "algebra", tensor reports under "product".
FDAlgebra algebra_from_file(const std::string& path) {
  Json j = load_json(path);
  if (j.is_object() && j.contains("algebra")) return algebra_from(j["algebra"]);
  if (j.is_object() && j.contains("product")) return algebra_from(j["product"]);
  return algebra_from(j);
}

RunReport run_tensor(const RunConfig& cfg) {
  FDAlgebra a = algebra_from_file(cfg.left_path);
  FDAlgebra b = algebra_from_file(cfg.right_path);
  Certificate ca = trace_form_semisimple(a);
  Certificate cb = trace_form_semisimple(b);
  KunnethReport kr = kunneth_check(a, ca, b, cb);

  if (!reverify(ca, a) || !reverify(cb, b) || !reverify(kr.certificate, kr.product))
    throw InternalError("tensor: certificate failed re-verification");

  RunReport rep;
  bool any_open = ca.verdict == Verdict::Inconclusive || cb.verdict == Verdict::Inconclusive ||
                  kr.certificate.verdict == Verdict::Inconclusive;
  if (any_open)
    rep.status = RunStatus::Inconclusive;
  else if (!kr.consistent)
    throw InternalError("tensor: definite factor verdicts contradict the product verdict");

  rep.body = Json{{"command", "tensor"},
                  {"left", Json{{"file", cfg.left_path},
                                {"dim", a.dim()},
                                {"certificate", json_of(ca)}}},
                  {"right", Json{{"file", cfg.right_path},
                                 {"dim", b.dim()},
                                 {"certificate", json_of(cb)}}},
                  {"product", json_of(kr.product)},
                  {"certificate", json_of(kr.certificate)},
                  {"consistent", kr.consistent},
                  {"summary", Json{{"product", verdict_name(kr.certificate.verdict)}}},
                  {"status", rep.status == RunStatus::Ok ? "ok" : "inconclusive"}};
  return rep;
}

RunReport run_certify(const RunConfig& cfg) {
  std::vector<Check> checks = cfg.checks.empty() ? std::vector<Check>{Check::Semisimple}
                                                 : cfg.checks;
  for (Check c : checks)
    if (c != Check::Semisimple && c != Check::FieldSummand)
      throw ValidationError(std::string("check '") + check_name(c) +
                            "' does not apply to certify");
  if (!cfg.relations.empty())
    throw ValidationError("--relations does not apply to certify");

  std::vector<std::string> names = MPoly::scan_names(cfg.poly_text);
  if (std::find(names.begin(), names.end(), cfg.poly_var) == names.end())
    throw ValidationError("the main variable '" + cfg.poly_var +
                          "' does not occur in the polynomial");
  ParamSystem::Builder bld;
  for (const std::string& n : names)
    if (n != cfg.poly_var) bld.add_param(n);
  bld.add_ring_var(cfg.poly_var);
  ParamSystemPtr sys = bld.build();
  UniPoly f = as_unipoly(MPoly::parse(sys, cfg.poly_text), cfg.poly_var);

  RunReport rep;
  Json& j = rep.body;
  j["command"] = "certify";
  j["var"] = cfg.poly_var;
  j["poly"] = to_mpoly(f).str();
  j["system"] = json_of(sys);
  // the quotient as a structure-constant algebra, ready for `tensor --left`
  j["algebra"] = json_of(univariate_quotient(f));

  Json summary = Json::object();
  for (Check c : checks) {
    Certificate cert = c == Check::Semisimple ? is_semisimple_univariate(f)
                                              : field_summand_certificate(f);
    require_reverified(cert, check_name(c));
    if (cert.verdict == Verdict::Inconclusive) rep.status = RunStatus::Inconclusive;
    const char* key = c == Check::Semisimple ? "semisimple" : "field_summand";
    j[key] = json_of(cert);
    summary[key] = verdict_name(cert.verdict);
  }
  j["summary"] = std::move(summary);
  j["status"] = rep.status == RunStatus::Ok ? "ok" : "inconclusive";
  return rep;
}

}  // namespace

RunReport run(const RunConfig& config) {
  switch (config.command) {
    case Command::Model:
    case Command::Polytope:
      return run_pipeline(config);
    case Command::Blowup:
      return run_blowup(config);
    case Command::Tensor:
      return run_tensor(config);
    case Command::Certify:
      return run_certify(config);
  }
  throw ValidationError("unknown command");
}

}  // namespace qhtoric
