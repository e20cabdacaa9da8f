#include "pimcert/vertex_sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pimcert/linalg.hpp"

namespace pimcert {
namespace {

enum class Band { Pass, Marginal, Violation };

struct Classified {
  Band band;
  double offender;  // eigenvalue responsible for a non-pass
};

Classified classify(double lmin, double lmax, const EigenvalueBand& b) {
  const bool lo_active = std::isfinite(b.lo);
  const bool hi_active = std::isfinite(b.hi);
  const bool lo_viol = lo_active && lmin < b.lo - b.margin;
  const bool hi_viol = hi_active && lmax > b.hi + b.margin;
  if (lo_viol || hi_viol) {
    double off;
    if (lo_viol && hi_viol) {
      off = (b.lo - lmin >= lmax - b.hi) ? lmin : lmax;  // larger excess, ties low
    } else {
      off = lo_viol ? lmin : lmax;
    }
    return {Band::Violation, off};
  }
  const bool lo_pass = !lo_active || lmin > b.lo + b.margin;
  const bool hi_pass = !hi_active || lmax < b.hi - b.margin;
  if (lo_pass && hi_pass) return {Band::Pass, 0.0};
  return {Band::Marginal, (lo_active && lmin <= b.lo + b.margin) ? lmin : lmax};
}

// Per-vertex eigenvalue extremes; `buf` and `eig` are caller scratch.
void vertex_extremes(const ParametricMatrix& m, std::uint64_t idx, DenseMatrix& scratch,
                     std::vector<double>& buf, std::vector<double>& eig, double& lmin,
                     double& lmax) {
  const int n = m.dim();
  m.instantiate_vertex(idx, scratch);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      buf[static_cast<std::size_t>(i) * n + j] = 0.5 * (scratch(i, j) + scratch(j, i));
    }
  }
  jacobi_eigenvalues(buf.data(), n, eig.data());
  lmin = eig[0];
  lmax = eig[n - 1];
}

struct LocalState {
  double min_eig = std::numeric_limits<double>::infinity();
  std::uint64_t min_vertex = kNoVertex;
  double max_eig = -std::numeric_limits<double>::infinity();
  std::uint64_t max_vertex = kNoVertex;
  std::uint64_t viol_vertex = kNoVertex;
  double viol_eig = 0.0;
  std::uint64_t marg_vertex = kNoVertex;
  double marg_eig = 0.0;
  std::uint64_t examined = 0;

  void account(std::uint64_t idx, double lmin, double lmax, const Classified& c) {
    ++examined;
    if (lmin < min_eig || (lmin == min_eig && idx < min_vertex)) {
      min_eig = lmin;
      min_vertex = idx;
    }
    if (lmax > max_eig || (lmax == max_eig && idx < max_vertex)) {
      max_eig = lmax;
      max_vertex = idx;
    }
    if (c.band == Band::Violation && idx < viol_vertex) {
      viol_vertex = idx;
      viol_eig = c.offender;
    }
    if (c.band == Band::Marginal && idx < marg_vertex) {
      marg_vertex = idx;
      marg_eig = c.offender;
    }
  }

  void merge_into(SweepOutcome& out) const {
    if (min_eig < out.min_eigenvalue ||
        (min_eig == out.min_eigenvalue && min_vertex < out.min_vertex)) {
      out.min_eigenvalue = min_eig;
      out.min_vertex = min_vertex;
    }
    if (max_eig > out.max_eigenvalue ||
        (max_eig == out.max_eigenvalue && max_vertex < out.max_vertex)) {
      out.max_eigenvalue = max_eig;
      out.max_vertex = max_vertex;
    }
    if (viol_vertex < out.first_violation) {
      out.first_violation = viol_vertex;
      out.violation_eigenvalue = viol_eig;
    }
    if (marg_vertex < out.first_marginal) {
      out.first_marginal = marg_vertex;
      out.marginal_eigenvalue = marg_eig;
    }
    out.examined += examined;
  }
};

// With a violation present, only the violation fields are stable across
// backends; normalize everything else so outcomes compare equal.
void canonicalize(SweepOutcome& out) {
  if (!out.has_violation()) return;
  SweepOutcome clean;
  clean.first_violation = out.first_violation;
  clean.violation_eigenvalue = out.violation_eigenvalue;
  clean.examined = out.first_violation + 1;
  out = clean;
}

SweepOutcome sweep_serial(const ParametricMatrix& m, const EigenvalueBand& band,
                          std::uint64_t count) {
  const int n = m.dim();
  SweepOutcome out;
  DenseMatrix scratch(n);
  std::vector<double> buf(static_cast<std::size_t>(n) * n), eig(n);
  LocalState loc;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    double lmin, lmax;
    vertex_extremes(m, idx, scratch, buf, eig, lmin, lmax);
    const Classified c = classify(lmin, lmax, band);
    loc.account(idx, lmin, lmax, c);
    if (c.band == Band::Violation) break;
  }
  loc.merge_into(out);
  canonicalize(out);
  return out;
}

#ifdef _OPENMP
SweepOutcome sweep_parallel(const ParametricMatrix& m, const EigenvalueBand& band,
                            std::uint64_t count) {
  const int n = m.dim();
  SweepOutcome out;
  std::atomic<std::uint64_t> best_viol{kNoVertex};
  std::atomic<bool> failed{false};
  std::exception_ptr eptr = nullptr;

#pragma omp parallel
  {
    DenseMatrix scratch(n);
    std::vector<double> buf(static_cast<std::size_t>(n) * n), eig(n);
    LocalState loc;

#pragma omp for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      const std::uint64_t idx = static_cast<std::uint64_t>(i);
      // Indices past a known violation cannot improve the result.
      if (idx >= best_viol.load(std::memory_order_relaxed)) continue;
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        double lmin, lmax;
        vertex_extremes(m, idx, scratch, buf, eig, lmin, lmax);
        const Classified c = classify(lmin, lmax, band);
        loc.account(idx, lmin, lmax, c);
        if (c.band == Band::Violation) {
          std::uint64_t cur = best_viol.load(std::memory_order_relaxed);
          while (idx < cur &&
                 !best_viol.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
          }
        }
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true)) eptr = std::current_exception();
      }
    }

#pragma omp critical(pimcert_sweep_merge)
    loc.merge_into(out);
  }

  if (eptr) std::rethrow_exception(eptr);
  canonicalize(out);
  return out;
}
#endif

}  // namespace

SweepOutcome sweep_eigenvalue_band(const ParametricMatrix& family, const EigenvalueBand& band,
                                   int max_symbols, SweepBackend backend) {
  const std::size_t K = family.num_symbols();
  if (max_symbols < 0 || K > static_cast<std::size_t>(max_symbols) || K > 62) {
    throw VertexBudgetExceeded("family has " + std::to_string(K) + " symbols, budget allows " +
                               std::to_string(max_symbols < 62 ? max_symbols : 62));
  }
  const std::uint64_t count = std::uint64_t{1} << K;

#ifdef _OPENMP
  const bool parallel = backend == SweepBackend::Parallel ||
                        (backend == SweepBackend::Auto && count >= 64 && sweep_thread_count() > 1);
  if (parallel) return sweep_parallel(family, band, count);
#else
  (void)backend;
#endif
  return sweep_serial(family, band, count);
}

int sweep_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace pimcert
