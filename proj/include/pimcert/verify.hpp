#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pimcert/pmatrix.hpp"
#include "pimcert/vertex_sweep.hpp"

namespace pimcert {

// Three-valued check outcome.  Sufficient-condition checks can prove a
// property or fail to decide; only an explicit counterexample disproves.
enum class Status { Proven, Disproven, Inconclusive };
const char* to_string(Status s);

struct Verdict {
  Status status = Status::Inconclusive;

  // Value the check compared against its threshold (a spectral radius, an
  // extreme eigenvalue) and the leftover distance to that threshold.
  std::optional<double> condition_value;
  std::optional<double> margin;

  // Concrete point in [-1,1]^K backing the verdict.  DISPROVEN always sets
  // it (re-instantiating it reproduces the violation); PROVEN/INCONCLUSIVE
  // may set it to the extremal or marginal vertex for diagnostics.
  std::optional<std::vector<double>> witness;
  std::optional<double> witness_eigenvalue;

  // Extra named certificate values, in report order.
  std::vector<std::pair<std::string, double>> certificate;

  std::string note;
};

struct CheckOptions {
  double margin = 1e-9;  // absolute slack around every strict inequality
  int max_symbols = 20;
  SweepBackend backend = SweepBackend::Auto;
};

// Sufficient regularity test: rho(|A0^-1| * B) < 1 with B = sum |Ak|.
// Singular midpoint is a genuine counterexample (witness eps = 0).
Verdict check_regularity_sufficient(const ParametricMatrix& m, const CheckOptions& opts = {});

// Strong positive definiteness via midpoint PD + sufficient regularity.
// No symmetry required.  Midpoint not PD disproves (the family contains it).
Verdict check_pd_sufficient(const ParametricMatrix& m, const CheckOptions& opts = {});

// Exact vertex test for positive definiteness of a symmetric family: every
// vertex's smallest eigenvalue must clear 0.  Throws NotSymmetric otherwise.
Verdict check_pd_vertex(const ParametricMatrix& m, const CheckOptions& opts = {});

// Hurwitz stability (all eigenvalues < 0), symmetric families only.
Verdict check_hurwitz_sufficient(const ParametricMatrix& m, const CheckOptions& opts = {});
Verdict check_hurwitz_vertex(const ParametricMatrix& m, const CheckOptions& opts = {});

// Stability via one stable sample member plus regularity of the family.
// The default sample is the midpoint (eps = 0).
Verdict check_hurwitz_via_regularity(const ParametricMatrix& m,
                                     const std::vector<double>& sample_eps,
                                     const CheckOptions& opts = {});
Verdict check_hurwitz_via_regularity(const ParametricMatrix& m, const CheckOptions& opts = {});

// Schur stability (all |eigenvalues| < 1), symmetric families only.
Verdict check_schur_vertex(const ParametricMatrix& m, const CheckOptions& opts = {});

// Schur via the two Hurwitz families A(e) - I and -A(e) - I; witnesses map
// back through lambda = lambda_shift + 1 resp. -(lambda_shift + 1).
Verdict check_schur_via_hurwitz(const ParametricMatrix& m, const CheckOptions& opts = {});

// Sufficient Schur test: midpoint spectrum strictly inside (-1, 1) plus
// sufficient regularity of both shifted families.
Verdict check_schur_sufficient(const ParametricMatrix& m, const CheckOptions& opts = {});

}  // namespace pimcert
