#pragma once

#include <stdexcept>
#include <string>

namespace qpath {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// parse (2), semantic (3), non-convergence (4).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int line_ = 0, int column_ = 0)
      : error(msg), line(line_), column(column_) {}
};

// Shape, boundary or label mismatches.
struct semantic_error : error {
  using error::error;
};

// Two values/matrices from incompatible quantale instances.
struct instance_error : semantic_error {
  using semantic_error::semantic_error;
};

struct convergence_error : error {
  int iterations = 0;
  convergence_error(const std::string& msg, int iterations_)
      : error(msg + " (after " + std::to_string(iterations_) + " iterations)"),
        iterations(iterations_) {}
};

}  // namespace qpath
