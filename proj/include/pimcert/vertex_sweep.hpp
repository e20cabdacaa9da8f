#pragma once

#include <cstdint>
#include <limits>

#include "pimcert/pmatrix.hpp"

namespace pimcert {

enum class SweepBackend {
  Auto,      // parallel when compiled with OpenMP and the sweep is big enough
  Serial,    // reference implementation
  Parallel,  // force OpenMP (falls back to serial without OpenMP support)
};

// Acceptance band for the eigenvalue spectrum of every vertex matrix.
// A vertex passes when all its eigenvalues are strictly inside (lo, hi) with
// `margin` to spare, violates when one leaves [lo - margin, hi + margin],
// and is marginal in between.  Infinite bounds switch a side off.
struct EigenvalueBand {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double margin = 1e-9;
};

inline constexpr std::uint64_t kNoVertex = ~std::uint64_t{0};

// Result of sweeping the band over all vertices.
//
// `first_violation` is the smallest lex index of a violating vertex, or
// kNoVertex.  When a violation exists, the serial backend stops there and the
// parallel backend may have examined a different subset, so only the
// violation fields (and `first_violation`/`violation_eigenvalue` in
// particular) are comparable across backends.  Without a violation, all
// fields are deterministic and backend-independent: min/max take the smallest
// attaining vertex index on ties, `first_marginal` is the smallest marginal
// index, and `examined` is the full vertex count.
struct SweepOutcome {
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  std::uint64_t min_vertex = kNoVertex;
  double max_eigenvalue = -std::numeric_limits<double>::infinity();
  std::uint64_t max_vertex = kNoVertex;

  std::uint64_t first_violation = kNoVertex;
  double violation_eigenvalue = std::numeric_limits<double>::quiet_NaN();

  std::uint64_t first_marginal = kNoVertex;
  double marginal_eigenvalue = std::numeric_limits<double>::quiet_NaN();

  std::uint64_t examined = 0;

  bool has_violation() const { return first_violation != kNoVertex; }
  bool has_marginal() const { return first_marginal != kNoVertex; }
};

// Symmetrizes each vertex matrix and runs Jacobi on it; the family itself
// must be symmetric (callers check once up front).  Throws
// VertexBudgetExceeded when the family has more than max_symbols symbols.
SweepOutcome sweep_eigenvalue_band(const ParametricMatrix& family,
                                   const EigenvalueBand& band,
                                   int max_symbols,
                                   SweepBackend backend = SweepBackend::Auto);

// Number of worker threads the parallel backend would use (1 without OpenMP).
int sweep_thread_count();

}  // namespace pimcert
