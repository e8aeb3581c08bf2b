#pragma once

#include <stdexcept>
#include <string>

namespace skein {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, size_t pos = std::string::npos)
      : std::runtime_error(what), position(pos) {}
  size_t position;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SiteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComparatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AxiomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreorderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace skein
