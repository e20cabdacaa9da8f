#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pimcert/problem.hpp"
#include "pimcert/radius.hpp"
#include "pimcert/verify.hpp"

namespace pimcert {

struct CheckRecord {
  CheckKind kind;
  std::string method;  // "sufficient", "vertex", "vertex (fallback)", "bisection"
  Verdict verdict;
  std::optional<RadiusResult> radius;  // set for CheckKind::Radius
  double time_ms = 0.0;
};

struct Report {
  ParametricMatrix family;
  ProblemOptions options;
  std::vector<CheckRecord> records;

  // 0: all PROVEN; 1: any DISPROVEN; 2: otherwise (some INCONCLUSIVE).
  // Input and runtime errors never reach a Report; the CLI maps them to 3.
  int exit_code() const;
};

// Runs the document's checks over its family.  Method resolution:
// "sufficient" and "vertex" run exactly that check; "auto" runs the
// sufficient check and falls back to the vertex check when the result is
// INCONCLUSIVE, the family is symmetric and 2^K fits the budget (otherwise
// the inconclusive verdict keeps a note saying why no fallback ran).
// The radius check always bisects.
Report run_checks(const ProblemDocument& doc);
Report run_checks(const ParametricMatrix& family, const std::vector<CheckKind>& checks,
                  const ProblemOptions& options);

// Deterministic renderings: fixed key order, doubles at 17 significant
// digits, non-finite values as the strings "inf"/"-inf"/"nan".  Two runs on
// one input differ only in time_ms values.
std::string to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace pimcert
