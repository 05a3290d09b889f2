#pragma once

#include <stdexcept>
#include <string>

namespace qhtoric {

// Bad user input: malformed files, invalid polytopes, parameter constraints.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Input is structurally fine but outside what the pipeline supports.
struct UnsupportedModelError : ValidationError {
  explicit UnsupportedModelError(const std::string& what) : ValidationError(what) {}
};

// A consistency check inside the library failed; always a bug, never user error.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qhtoric
