#include "qhtoric/param_system.hpp"

#include <algorithm>

#include "qhtoric/errors.hpp"

namespace qhtoric {

ParamSystem::Builder& ParamSystem::Builder::add_param(const std::string& name,
                                                      std::optional<SymExp> meaning,
                                                      std::optional<Rational> gamma) {
  VarDecl d;
  d.name = name;
  d.ring_var = false;
  d.meaning = std::move(meaning);
  d.gamma = std::move(gamma);
  vars_.push_back(std::move(d));
  return *this;
}

ParamSystem::Builder& ParamSystem::Builder::add_ring_var(const std::string& name) {
  VarDecl d;
  d.name = name;
  d.ring_var = true;
  vars_.push_back(std::move(d));
  return *this;
}

ParamSystem::Builder& ParamSystem::Builder::add_decl(const VarDecl& d) {
  vars_.push_back(d);
  return *this;
}

ParamSystem::Builder& ParamSystem::Builder::add_relation(
    const std::string& var, const std::map<std::string, int>& target) {
  raw_relations_.emplace_back(var, target);
  return *this;
}

std::shared_ptr<const ParamSystem> ParamSystem::Builder::build() {
  auto sys = std::shared_ptr<ParamSystem>(new ParamSystem());
  sys->vars_ = vars_;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name.empty()) throw ValidationError("empty variable name");
    if (!sys->index_.emplace(vars_[i].name, i).second)
      throw ValidationError("duplicate variable name '" + vars_[i].name + "'");
  }
  for (const auto& [name, target] : raw_relations_) {
    VarRelation rel;
    rel.var = sys->require(name);
    for (const auto& [tname, e] : target) {
      std::size_t ti = sys->require(tname);
      if (ti == rel.var)
        throw ValidationError("relation for '" + name + "' mentions itself");
      if (e != 0) rel.target[ti] = e;
    }
    sys->relations_.push_back(std::move(rel));
  }
  // Reject substitution chains: no relation target may mention a substituted variable.
  for (const auto& r : sys->relations_)
    for (const auto& [ti, e] : r.target)
      for (const auto& r2 : sys->relations_)
        if (r2.var == ti)
          throw ValidationError("chained relations through '" + sys->vars_[ti].name + "'");
  return sys;
}

std::optional<std::size_t> ParamSystem::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ParamSystem::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw ValidationError("unknown variable '" + name + "'");
  return *i;
}

std::pair<std::shared_ptr<const ParamSystem>, std::vector<std::optional<std::size_t>>>
ParamSystem::without(const std::vector<std::size_t>& drop) const {
  std::vector<bool> dropped(vars_.size(), false);
  for (auto i : drop) {
    if (i >= vars_.size()) throw InternalError("ParamSystem::without: index out of range");
    dropped[i] = true;
  }
  Builder b;
  std::vector<std::optional<std::size_t>> remap(vars_.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (dropped[i]) continue;
    b.add_decl(vars_[i]);
    remap[i] = next++;
  }
  // Relations touching a dropped variable do not survive.
  auto sys = b.build();
  auto mut = std::const_pointer_cast<ParamSystem>(sys);
  for (const auto& r : relations_) {
    if (dropped[r.var]) continue;
    bool ok = true;
    VarRelation nr;
    nr.var = *remap[r.var];
    for (const auto& [ti, e] : r.target) {
      if (dropped[ti]) {
        ok = false;
        break;
      }
      nr.target[*remap[ti]] = e;
    }
    if (ok) mut->relations_.push_back(std::move(nr));
  }
  return {sys, remap};
}

std::shared_ptr<const ParamSystem> ParamSystem::with_extra(const std::vector<VarDecl>& extra) const {
  Builder b;
  for (const auto& d : vars_) b.add_decl(d);
  for (const auto& d : extra) b.add_decl(d);
  auto sys = b.build();
  auto mut = std::const_pointer_cast<ParamSystem>(sys);
  mut->relations_ = relations_;
  return sys;
}

}  // namespace qhtoric
