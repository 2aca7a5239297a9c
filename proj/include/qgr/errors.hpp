#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qgr {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
  int line_number;
};

struct NotFiniteGK : std::runtime_error {
  explicit NotFiniteGK(std::vector<std::string> witness)
      : std::runtime_error("path algebra has infinite GK-dimension (doubly cyclic: " +
                           join(witness) + ")"),
        doubly_cyclic(std::move(witness)) {}
  std::vector<std::string> doubly_cyclic;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i];
    }
    return s;
  }
};

struct NotCyclicVertex : std::runtime_error {
  explicit NotCyclicVertex(const std::string& v)
      : std::runtime_error("vertex '" + v + "' is not cyclic") {}
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotEventuallyPeriodic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPoset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExplosionCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency violation; indicates a bug, not bad input.
struct AssertionFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qgr
