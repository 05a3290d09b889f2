#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhtoric/json_io.hpp"
#include "qhtoric/rational.hpp"

namespace qhtoric {

enum class Command { Model, Polytope, Blowup, Tensor, Certify };

// The pipeline stages a run can be asked to report on.
enum class Check { Validate, Classify, Presentation, Reduce, Semisimple, FieldSummand };

const char* check_name(Check c);
Check parse_check(const std::string& text);

// Adds every prerequisite (classification needs validation, the reduction
// needs the presentation, the verdicts need the reduction) and returns the
// closed set in pipeline order, deduplicated.
std::vector<Check> close_checks(const std::vector<Check>& checks);

struct RunConfig {
  Command command = Command::Model;

  std::string model;                       // model: family name
  std::map<std::string, Rational> params;  // model: named sizes
  std::string input_path;                  // polytope: vertex file
  std::string left_path, right_path;       // tensor: factor algebra files
  long blowup_n = 2;                       // blowup: complex dimension of the base
  std::string poly_text;                   // certify: polynomial text
  std::string poly_var = "X";              // certify: main variable

  std::vector<Check> checks;  // empty = the command's default
  std::string relations;      // "", "y=z" or "xyz=1": declared parameter regime
  bool nonminimal_d = false;  // pad d-vectors to full cones (same relations)

  enum class Emit { Text, Json } emit = Emit::Text;
  std::string out_path;  // empty = stdout
};

// Ok covers definitive negative verdicts too: a certified nilpotent answers
// the question.  Inconclusive means a witness search came back empty.
// Invalid input and internal bugs surface as ValidationError/InternalError
// from run(); the executable maps them to their statuses.
enum class RunStatus { Ok = 0, InvalidInput = 1, Inconclusive = 2, InternalBug = 3 };

struct RunReport {
  Json body;
  RunStatus status = RunStatus::Ok;

  std::string rendered(RunConfig::Emit emit) const;
};

RunReport run(const RunConfig& config);

}  // namespace qhtoric
