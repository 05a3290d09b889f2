#pragma once

#include <initializer_list>
#include <string>

#include "qhtoric/mpoly.hpp"

namespace qht {

inline qhtoric::ParamSystemPtr vars(std::initializer_list<std::string> names) {
  qhtoric::ParamSystem::Builder b;
  for (const auto& n : names) b.add_param(n);
  return b.build();
}

inline qhtoric::MPoly P(qhtoric::ParamSystemPtr sys, const std::string& text) {
  return qhtoric::MPoly::parse(std::move(sys), text);
}

inline qhtoric::Rational Q(const std::string& text) { return qhtoric::rat_parse(text); }

}  // namespace qht
