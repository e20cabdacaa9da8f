#pragma once

#include <string>
#include <vector>

#include "pimcert/pmatrix.hpp"

namespace pimcert {

enum class CheckKind { Regularity, PositiveDefinite, Hurwitz, Schur, Radius };
const char* to_string(CheckKind k);
CheckKind check_kind_from_string(const std::string& s);  // InvalidDocument on unknown

enum class Method { Auto, Sufficient, Vertex };
const char* to_string(Method m);
Method method_from_string(const std::string& s);  // InvalidDocument on unknown

struct ProblemOptions {
  Method method = Method::Auto;
  double tolerance = 1e-9;   // margin around strict inequalities
  double bisect_tol = 0.0;   // 0 = auto (1e-6 * max(1, bracket width))
  double r_max = 1e6;
  int max_vertices = 20;     // symbol budget K for vertex enumeration
};

// Parsed problem file: a parameter box, a matrix of expression strings over
// those parameters, the checks to run and option overrides.
struct ProblemDocument {
  std::vector<ParametricMatrix::Parameter> parameters;
  std::vector<std::vector<std::string>> matrix;
  std::vector<CheckKind> checks;
  ProblemOptions options;
};

// Parses and validates a JSON problem document.  Shape errors, unknown keys,
// duplicate or empty parameter names, non-square matrices and malformed
// intervals all throw InvalidDocument with the offending JSON path in the
// message; JSON syntax errors are wrapped with the parser's byte position.
ProblemDocument parse_problem(const std::string& json_text);

// Parses every entry expression and evaluates it over the box.  Expression
// errors are rethrown as InvalidDocument prefixed with matrix[i][j].
ParametricMatrix build_family(const ProblemDocument& doc);

}  // namespace pimcert
