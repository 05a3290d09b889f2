#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qhtoric/cli.hpp"
#include "qhtoric/errors.hpp"
#include "qhtoric/models.hpp"

namespace {

using qhtoric::Check;
using qhtoric::RunConfig;

void add_output_flags(CLI::App* cmd, RunConfig& cfg, std::string& emit) {
  cmd->add_option("--emit", emit, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
}

void add_check_flags(CLI::App* cmd, std::vector<std::string>& checks) {
  cmd->add_option("--check", checks,
                  "Requested checks (validate, classify, presentation, reduce, semisimple, "
                  "field-summand); prerequisites are added automatically")
      ->delimiter(',');
}

int dispatch(const RunConfig& cfg) {
  qhtoric::RunReport rep = qhtoric::run(cfg);
  std::string text = rep.rendered(cfg.emit);
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw qhtoric::ValidationError("cannot write '" + cfg.out_path + "'");
    out << text;
  }
  return static_cast<int>(rep.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum homology presentations of toric surfaces: "
               "moment polytope -> relations -> reduced quotient -> certified verdicts"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string emit = "text";
  std::vector<std::string> check_names;
  std::vector<std::string> param_args;

  CLI::App* model = app.add_subcommand("model", "Run a named standard family");
  model->add_option("--name", cfg.model, "One of: " + [] {
        std::string all;
        for (const std::string& n : qhtoric::standard_model_names())
          all += (all.empty() ? "" : ", ") + n;
        return all;
      }())
      ->required();
  model->add_option("--param", param_args, "Size parameter as name=p/q (repeatable)");
  for (const char* name : {"lambda", "rho", "eps", "delta", "alpha", "beta", "gamma", "a", "b"})
    model->add_option("--" + std::string(name), [&cfg, name](const std::vector<std::string>& v) {
      cfg.params[name] = qhtoric::rat_parse(v.at(0));
      return true;
    }, "Size parameter " + std::string(name) + " as p/q");
  model->add_option("--relations", cfg.relations,
                    "Declared parameter regime for the coupled reduction: y=z or xyz=1");
  model->add_flag("--nonminimal-d", cfg.nonminimal_d,
                  "Pad d-vectors to full cones (the relations are unchanged)");
  add_check_flags(model, check_names);
  add_output_flags(model, cfg, emit);

  CLI::App* polytope = app.add_subcommand("polytope", "Run a polygon given by its vertices");
  polytope->add_option("--file", cfg.input_path, "JSON file with {\"vertices\": [[x, y], ...]}")
      ->required();
  polytope->add_option("--relations", cfg.relations,
                       "Declared parameter regime for the coupled reduction");
  polytope->add_flag("--nonminimal-d", cfg.nonminimal_d, "Pad d-vectors to full cones");
  add_check_flags(polytope, check_names);
  add_output_flags(polytope, cfg, emit);

  CLI::App* blowup = app.add_subcommand("blowup", "Analyze the one-point blow-up algebra");
  blowup->add_option("--n", cfg.blowup_n, "Complex dimension of the base (n >= 2)")->required();
  add_output_flags(blowup, cfg, emit);

  CLI::App* tensor = app.add_subcommand("tensor", "Tensor two serialized algebras");
  tensor->add_option("--left", cfg.left_path, "Left factor algebra JSON")->required();
  tensor->add_option("--right", cfg.right_path, "Right factor algebra JSON")->required();
  add_output_flags(tensor, cfg, emit);

  CLI::App* certify = app.add_subcommand("certify", "Certify a univariate quotient directly");
  certify->add_option("--poly", cfg.poly_text, "Polynomial text, e.g. \"X^3 - x*X - 1\"")
      ->required();
  certify->add_option("--var", cfg.poly_var, "Main variable (default X)");
  add_check_flags(certify, check_names);
  add_output_flags(certify, cfg, emit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (model->parsed()) cfg.command = qhtoric::Command::Model;
    if (polytope->parsed()) cfg.command = qhtoric::Command::Polytope;
    if (blowup->parsed()) cfg.command = qhtoric::Command::Blowup;
    if (tensor->parsed()) cfg.command = qhtoric::Command::Tensor;
    if (certify->parsed()) cfg.command = qhtoric::Command::Certify;

    cfg.emit = emit == "json" ? RunConfig::Emit::Json : RunConfig::Emit::Text;
    for (const std::string& c : check_names) cfg.checks.push_back(qhtoric::parse_check(c));
    for (const std::string& p : param_args) {
      auto eq = p.find('=');
      if (eq == std::string::npos)
        throw qhtoric::ValidationError("--param wants name=p/q, got '" + p + "'");
      cfg.params[p.substr(0, eq)] = qhtoric::rat_parse(p.substr(eq + 1));
    }

    return dispatch(cfg);
  } catch (const qhtoric::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(qhtoric::RunStatus::InvalidInput);
  } catch (const qhtoric::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(qhtoric::RunStatus::InternalBug);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(qhtoric::RunStatus::InternalBug);
  }
}
