#include "pimcert/radius.hpp"

#include <algorithm>
#include <cmath>

#include "pimcert/linalg.hpp"

namespace pimcert {

LambdaMaxResult lambda_max_at_radius(const ParametricMatrix& m, double r,
                                     const RadiusOptions& opts) {
  if (!m.is_symmetric()) {
    throw NotSymmetric("radius evaluation requires a symmetric family");
  }
  EigenvalueBand all;  // no thresholds: plain envelope of the spectrum
  all.margin = opts.margin;
  const SweepOutcome sw =
      sweep_eigenvalue_band(m.scaled(r), all, opts.max_symbols, opts.backend);
  return {sw.max_eigenvalue, VertexAssignment::from_index(sw.max_vertex, m.num_symbols())};
}

RadiusResult stability_radius(const ParametricMatrix& m, const RadiusOptions& opts) {
  if (!m.is_symmetric()) {
    throw NotSymmetric("stability radius requires a symmetric family");
  }
  if (!(opts.r_max > 0.0)) {
    throw NegativeRadius("r_max must be positive");
  }
  RadiusResult res;
  const std::vector<double> eigs = sym_eigenvalues(m.midpoint());
  const double lmax0 = eigs.back();
  if (lmax0 >= -opts.margin) {
    res.midpoint_unstable = true;
    res.witness_lambda_max = lmax0;
    return res;
  }

  // g(r) = max vertex eigenvalue at radius r is non-decreasing in r; find a
  // bracket by doubling, then bisect.  Probes inside the margin band count
  // as upper bounds so the bracket keeps tightening.
  double lo = 0.0;
  double hi = 0.0;
  double r = std::min(1.0, opts.r_max);
  for (;;) {
    const LambdaMaxResult g = lambda_max_at_radius(m, r, opts);
    if (g.value < -opts.margin) {
      lo = r;
      if (r >= opts.r_max) {
        res.s_lo = opts.r_max;
        res.s_hi = std::numeric_limits<double>::infinity();
        res.capped = true;
        res.witness = g.vertex;
        res.witness_lambda_max = g.value;
        return res;
      }
      r = std::min(2.0 * r, opts.r_max);
    } else {
      hi = r;
      res.witness = g.vertex;
      res.witness_lambda_max = g.value;
      break;
    }
  }

  const double tol = opts.bisect_tol > 0.0 ? opts.bisect_tol : 1e-6 * std::max(1.0, hi - lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket narrower than one ulp
    const LambdaMaxResult g = lambda_max_at_radius(m, mid, opts);
    if (g.value < -opts.margin) {
      lo = mid;
    } else {
      hi = mid;
      res.witness = g.vertex;
      res.witness_lambda_max = g.value;
    }
  }
  res.s_lo = lo;
  res.s_hi = hi;
  return res;
}

}  // namespace pimcert
