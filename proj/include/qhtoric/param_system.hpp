#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhtoric/rational.hpp"
#include "qhtoric/symexp.hpp"

namespace qhtoric {

// One variable of a coefficient ring.  Coefficient parameters stand for a
// power of the series variable: the optional symbolic meaning records which
// power (e.g. s_eps stands for the eps-th power), and gamma carries the
// numeric value once sizes are fixed.  Ring variables are the main unknowns
// of a presentation (X, or A and B) and carry no meaning of their own.
struct VarDecl {
  std::string name;
  bool ring_var = false;
  std::optional<SymExp> meaning;
  std::optional<Rational> gamma;

  bool operator==(const VarDecl& o) const {
    return name == o.name && ring_var == o.ring_var && meaning == o.meaning && gamma == o.gamma;
  }
};

// A declared monomial substitution between variables, e.g. z -> y or
// x -> y^-1 * z^-1.  Targets never mention a substituted variable.
struct VarRelation {
  std::size_t var;
  std::map<std::size_t, int> target;

  bool operator==(const VarRelation& o) const { return var == o.var && target == o.target; }
};

// Ordered list of variable declarations shared by every polynomial of a
// computation.  Immutable after build; polynomials hold it by shared_ptr and
// binary operations insist on structural equality.
class ParamSystem {
 public:
  class Builder {
   public:
    Builder& add_param(const std::string& name, std::optional<SymExp> meaning = std::nullopt,
                       std::optional<Rational> gamma = std::nullopt);
    Builder& add_ring_var(const std::string& name);
    Builder& add_decl(const VarDecl& d);
    Builder& add_relation(const std::string& var, const std::map<std::string, int>& target);
    std::shared_ptr<const ParamSystem> build();

   private:
    std::vector<VarDecl> vars_;
    std::vector<std::pair<std::string, std::map<std::string, int>>> raw_relations_;
  };

  std::size_t size() const { return vars_.size(); }
  const VarDecl& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<VarDecl>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;  // throws ValidationError if absent

  const std::vector<VarRelation>& relations() const { return relations_; }

  bool operator==(const ParamSystem& o) const {
    return vars_ == o.vars_ && relations_ == o.relations_;
  }
  bool operator!=(const ParamSystem& o) const { return !(*this == o); }

  // New system without the given variables; also reports the index remap
  // (old index -> new index, or nullopt for removed variables).
  std::pair<std::shared_ptr<const ParamSystem>, std::vector<std::optional<std::size_t>>>
  without(const std::vector<std::size_t>& drop) const;

  // New system with extra declarations appended.
  std::shared_ptr<const ParamSystem> with_extra(const std::vector<VarDecl>& extra) const;

 private:
  friend class Builder;
  ParamSystem() = default;
  std::vector<VarDecl> vars_;
  std::map<std::string, std::size_t> index_;
  std::vector<VarRelation> relations_;
};

using ParamSystemPtr = std::shared_ptr<const ParamSystem>;

}  // namespace qhtoric
