#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "pimcert/pmatrix.hpp"
#include "pimcert/vertex_sweep.hpp"

namespace pimcert {

struct RadiusOptions {
  // <= 0 picks the default 1e-6 * max(1, initial bracket width).
  double bisect_tol = 0.0;
  double r_max = 1e6;
  double margin = 1e-9;
  int max_symbols = 20;
  SweepBackend backend = SweepBackend::Auto;
};

// Largest eigenvalue over all vertices of the family scaled to radius r,
// with the attaining vertex.  Symmetric families only.
struct LambdaMaxResult {
  double value;
  VertexAssignment vertex;
};
LambdaMaxResult lambda_max_at_radius(const ParametricMatrix& m, double r,
                                     const RadiusOptions& opts = {});

// Stability radius bracket for a symmetric Hurwitz family: the largest box
// scaling that keeps every member stable.
//
//   g(r) = max over vertices of lambda_max(A0 + r * sum Ak e_k)
//
// is non-decreasing in r; the bracket satisfies g(s_lo) < -margin and
// g(s_hi) >= -margin with s_hi - s_lo <= tol.  `witness` is the vertex
// attaining g(s_hi).  An unstable midpoint reports s_lo = s_hi = 0 with
// `midpoint_unstable` set instead of throwing.  When g stays below -margin
// all the way to r_max, s_lo = r_max, s_hi = +inf and `capped` is set.
struct RadiusResult {
  double s_lo = 0.0;
  double s_hi = 0.0;
  std::optional<VertexAssignment> witness;
  double witness_lambda_max = std::numeric_limits<double>::quiet_NaN();
  bool capped = false;
  bool midpoint_unstable = false;
};

RadiusResult stability_radius(const ParametricMatrix& m, const RadiusOptions& opts = {});

}  // namespace pimcert
