#include "pimcert/verify.hpp"

#include <cmath>

#include "pimcert/linalg.hpp"

namespace pimcert {

const char* to_string(Status s) {
  switch (s) {
    case Status::Proven:
      return "PROVEN";
    case Status::Disproven:
      return "DISPROVEN";
    default:
      return "INCONCLUSIVE";
  }
}

namespace {

std::vector<double> zeros(std::size_t k) { return std::vector<double>(k, 0.0); }

void require_symmetric(const ParametricMatrix& m, const char* what) {
  if (!m.is_symmetric()) {
    throw NotSymmetric(std::string(what) + " requires a symmetric family");
  }
}

// Smallest/largest eigenvalue of the symmetric part of the midpoint.
std::vector<double> midpoint_spectrum(const ParametricMatrix& m) {
  const DenseMatrix& a = m.midpoint();
  const int n = a.dim();
  DenseMatrix sym(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (a(i, j) + a(j, i));
  }
  return sym_eigenvalues(sym);
}

// Runs the band sweep and resolves the two non-pass outcomes; a pass leaves
// `early` empty and the caller builds its PROVEN verdict from `sw`.
struct BandSweep {
  SweepOutcome sw;
  std::optional<Verdict> early;
};

BandSweep run_band(const ParametricMatrix& m, const EigenvalueBand& band,
                   const CheckOptions& opts, const char* below_msg, const char* above_msg) {
  BandSweep bs;
  bs.sw = sweep_eigenvalue_band(m, band, opts.max_symbols, opts.backend);
  if (bs.sw.has_violation()) {
    Verdict v;
    v.status = Status::Disproven;
    v.witness = VertexAssignment::from_index(bs.sw.first_violation, m.num_symbols()).as_doubles();
    v.witness_eigenvalue = bs.sw.violation_eigenvalue;
    v.condition_value = bs.sw.violation_eigenvalue;
    v.note = bs.sw.violation_eigenvalue < band.lo ? below_msg : above_msg;
    bs.early = std::move(v);
  } else if (bs.sw.has_marginal()) {
    Verdict v;
    v.status = Status::Inconclusive;
    v.witness = VertexAssignment::from_index(bs.sw.first_marginal, m.num_symbols()).as_doubles();
    v.witness_eigenvalue = bs.sw.marginal_eigenvalue;
    v.note = "a vertex eigenvalue lies within the margin of the threshold";
    bs.early = std::move(v);
  }
  return bs;
}

}  // namespace

Verdict check_regularity_sufficient(const ParametricMatrix& m, const CheckOptions& opts) {
  Verdict v;
  DenseMatrix inv;
  try {
    inv = invert(m.midpoint());
  } catch (const SingularMatrix&) {
    v.status = Status::Disproven;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = 0.0;
    v.note = "midpoint matrix is singular";
    return v;
  }
  double rho;
  try {
    rho = spectral_radius_nonneg(abs_entrywise(inv) * m.envelope());
  } catch (const NoConvergence& e) {
    v.status = Status::Inconclusive;
    v.note = std::string("spectral radius estimate did not converge: ") + e.what();
    return v;
  }
  v.condition_value = rho;
  v.margin = 1.0 - rho;
  if (rho < 1.0 - opts.margin) {
    v.status = Status::Proven;
  } else {
    v.status = Status::Inconclusive;
    v.note = "sufficient condition not met: spectral radius is not below 1";
  }
  return v;
}

Verdict check_pd_sufficient(const ParametricMatrix& m, const CheckOptions& opts) {
  if (!is_positive_definite(m.midpoint())) {
    const std::vector<double> eigs = midpoint_spectrum(m);
    Verdict v;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = eigs.front();
    v.condition_value = eigs.front();
    if (eigs.front() < -opts.margin) {
      v.status = Status::Disproven;
      v.note = "midpoint matrix is not positive definite";
    } else {
      v.status = Status::Inconclusive;
      v.note = "midpoint matrix is only marginally definite";
    }
    return v;
  }

  Verdict reg = check_regularity_sufficient(m, opts);
  if (reg.status == Status::Proven) {
    Verdict v;
    v.status = Status::Proven;
    v.condition_value = reg.condition_value;
    v.margin = reg.margin;
    return v;
  }
  Verdict v;
  v.status = Status::Inconclusive;
  v.condition_value = reg.condition_value;
  v.margin = reg.margin;
  v.note = reg.status == Status::Disproven
               ? "midpoint passes the definiteness probe yet failed to invert"
               : "midpoint is positive definite but regularity is unresolved: " + reg.note;
  return v;
}

Verdict check_pd_vertex(const ParametricMatrix& m, const CheckOptions& opts) {
  require_symmetric(m, "vertex positive definiteness check");
  EigenvalueBand band;
  band.lo = 0.0;
  band.margin = opts.margin;
  BandSweep bs = run_band(m, band, opts, "a vertex matrix has an eigenvalue below 0", "");
  if (bs.early) return *bs.early;

  Verdict v;
  v.status = Status::Proven;
  v.condition_value = bs.sw.min_eigenvalue;
  v.margin = bs.sw.min_eigenvalue;
  v.witness = VertexAssignment::from_index(bs.sw.min_vertex, m.num_symbols()).as_doubles();
  v.witness_eigenvalue = bs.sw.min_eigenvalue;
  v.certificate.emplace_back("lambda_min", bs.sw.min_eigenvalue);
  return v;
}

Verdict check_hurwitz_vertex(const ParametricMatrix& m, const CheckOptions& opts) {
  require_symmetric(m, "vertex Hurwitz check");
  EigenvalueBand band;
  band.hi = 0.0;
  band.margin = opts.margin;
  BandSweep bs = run_band(m, band, opts, "", "a vertex matrix has an eigenvalue above 0");
  if (bs.early) return *bs.early;

  Verdict v;
  v.status = Status::Proven;
  v.condition_value = bs.sw.max_eigenvalue;
  v.margin = -bs.sw.max_eigenvalue;
  v.witness = VertexAssignment::from_index(bs.sw.max_vertex, m.num_symbols()).as_doubles();
  v.witness_eigenvalue = bs.sw.max_eigenvalue;
  v.certificate.emplace_back("lambda_max", bs.sw.max_eigenvalue);
  return v;
}

Verdict check_schur_vertex(const ParametricMatrix& m, const CheckOptions& opts) {
  require_symmetric(m, "vertex Schur check");
  EigenvalueBand band;
  band.lo = -1.0;
  band.hi = 1.0;
  band.margin = opts.margin;
  BandSweep bs = run_band(m, band, opts, "a vertex matrix has an eigenvalue below -1",
                          "a vertex matrix has an eigenvalue above 1");
  if (bs.early) return *bs.early;

  const double lmin = bs.sw.min_eigenvalue;
  const double lmax = bs.sw.max_eigenvalue;
  const bool low_side = std::abs(lmin) >= std::abs(lmax);
  Verdict v;
  v.status = Status::Proven;
  v.condition_value = std::max(std::abs(lmin), std::abs(lmax));
  v.margin = 1.0 - *v.condition_value;
  v.witness = VertexAssignment::from_index(low_side ? bs.sw.min_vertex : bs.sw.max_vertex,
                                           m.num_symbols())
                  .as_doubles();
  v.witness_eigenvalue = low_side ? lmin : lmax;
  v.certificate.emplace_back("lambda_min", lmin);
  v.certificate.emplace_back("lambda_max", lmax);
  return v;
}

Verdict check_hurwitz_sufficient(const ParametricMatrix& m, const CheckOptions& opts) {
  require_symmetric(m, "sufficient Hurwitz check");
  const std::vector<double> eigs = sym_eigenvalues(m.midpoint());
  const double lmax = eigs.back();
  if (lmax > opts.margin) {
    Verdict v;
    v.status = Status::Disproven;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = lmax;
    v.note = "midpoint matrix is not Hurwitz stable";
    return v;
  }
  if (lmax >= -opts.margin) {
    Verdict v;
    v.status = Status::Inconclusive;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = lmax;
    v.note = "midpoint matrix is only marginally stable";
    return v;
  }

  Verdict reg = check_regularity_sufficient(m, opts);
  Verdict v;
  v.condition_value = reg.condition_value;
  v.margin = reg.margin;
  v.certificate.emplace_back("midpoint_lambda_max", lmax);
  if (reg.status == Status::Proven) {
    v.status = Status::Proven;
  } else {
    v.status = Status::Inconclusive;
    v.note = reg.status == Status::Disproven
                 ? "midpoint is stable yet failed to invert"
                 : "midpoint is stable but regularity is unresolved: " + reg.note;
  }
  return v;
}

Verdict check_hurwitz_via_regularity(const ParametricMatrix& m,
                                     const std::vector<double>& sample_eps,
                                     const CheckOptions& opts) {
  require_symmetric(m, "Hurwitz check via regularity");
  const DenseMatrix sample = m.instantiate(sample_eps);
  const std::vector<double> eigs = sym_eigenvalues(sample);
  const double lmax = eigs.back();
  if (lmax > opts.margin) {
    Verdict v;
    v.status = Status::Disproven;
    v.witness = sample_eps;
    v.witness_eigenvalue = lmax;
    v.note = "sample member is not Hurwitz stable";
    return v;
  }
  if (lmax >= -opts.margin) {
    Verdict v;
    v.status = Status::Inconclusive;
    v.witness = sample_eps;
    v.witness_eigenvalue = lmax;
    v.note = "sample member is only marginally stable";
    return v;
  }

  Verdict reg = check_regularity_sufficient(m, opts);
  Verdict v;
  v.condition_value = reg.condition_value;
  v.margin = reg.margin;
  v.certificate.emplace_back("sample_lambda_max", lmax);
  if (reg.status == Status::Proven) {
    v.status = Status::Proven;
  } else if (reg.status == Status::Disproven) {
    // Singular midpoint: the midpoint itself has eigenvalue 0, so the family
    // contains an unstable member.
    v.status = Status::Disproven;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = 0.0;
    v.note = "midpoint matrix is singular, hence not Hurwitz stable";
  } else {
    v.status = Status::Inconclusive;
    v.note = "sample member is stable but regularity is unresolved: " + reg.note;
  }
  return v;
}

Verdict check_hurwitz_via_regularity(const ParametricMatrix& m, const CheckOptions& opts) {
  return check_hurwitz_via_regularity(m, zeros(m.num_symbols()), opts);
}

Verdict check_schur_via_hurwitz(const ParametricMatrix& m, const CheckOptions& opts) {
  require_symmetric(m, "Schur check via Hurwitz");

  // A(e) - I: eigenvalues above 1 become Hurwitz violations.
  Verdict minus = check_hurwitz_vertex(m.shifted(-1.0), opts);
  if (minus.status == Status::Disproven) {
    Verdict v;
    v.status = Status::Disproven;
    v.witness = minus.witness;
    v.witness_eigenvalue = *minus.witness_eigenvalue + 1.0;
    v.condition_value = v.witness_eigenvalue;
    v.note = "a vertex matrix has an eigenvalue above 1";
    return v;
  }

  // -A(e) - I: eigenvalues below -1 become Hurwitz violations.
  Verdict plus = check_hurwitz_vertex(m.negated().shifted(-1.0), opts);
  if (plus.status == Status::Disproven) {
    Verdict v;
    v.status = Status::Disproven;
    v.witness = plus.witness;
    v.witness_eigenvalue = -(*plus.witness_eigenvalue + 1.0);
    v.condition_value = v.witness_eigenvalue;
    v.note = "a vertex matrix has an eigenvalue below -1";
    return v;
  }

  Verdict v;
  if (minus.status == Status::Proven && plus.status == Status::Proven) {
    const double lambda_max = *minus.condition_value + 1.0;
    const double lambda_min = -(*plus.condition_value + 1.0);
    const double bound = std::max(std::abs(lambda_max), std::abs(lambda_min));
    v.status = Status::Proven;
    v.condition_value = bound;
    v.margin = 1.0 - bound;
    v.certificate.emplace_back("lambda_min", lambda_min);
    v.certificate.emplace_back("lambda_max", lambda_max);
  } else {
    const Verdict& marg = (minus.status != Status::Proven) ? minus : plus;
    v.status = Status::Inconclusive;
    v.witness = marg.witness;
    v.note = "a vertex eigenvalue lies within the margin of the unit circle";
  }
  return v;
}

Verdict check_schur_sufficient(const ParametricMatrix& m, const CheckOptions& opts) {
  require_symmetric(m, "sufficient Schur check");
  const std::vector<double> eigs = sym_eigenvalues(m.midpoint());
  const double lo = eigs.front();
  const double hi = eigs.back();
  const double bound = std::max(std::abs(lo), std::abs(hi));
  const double extreme = (std::abs(lo) >= std::abs(hi)) ? lo : hi;
  if (bound > 1.0 + opts.margin) {
    Verdict v;
    v.status = Status::Disproven;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = extreme;
    v.note = "midpoint matrix is not Schur stable";
    return v;
  }
  if (bound >= 1.0 - opts.margin) {
    Verdict v;
    v.status = Status::Inconclusive;
    v.witness = zeros(m.num_symbols());
    v.witness_eigenvalue = extreme;
    v.note = "midpoint matrix is only marginally Schur stable";
    return v;
  }

  Verdict reg_minus = check_regularity_sufficient(m.shifted(-1.0), opts);
  Verdict reg_plus = check_regularity_sufficient(m.negated().shifted(-1.0), opts);
  Verdict v;
  v.certificate.emplace_back("midpoint_spectral_bound", bound);
  if (reg_minus.condition_value) {
    v.certificate.emplace_back("rho_shift_minus", *reg_minus.condition_value);
  }
  if (reg_plus.condition_value) {
    v.certificate.emplace_back("rho_shift_plus", *reg_plus.condition_value);
  }
  if (reg_minus.status == Status::Proven && reg_plus.status == Status::Proven) {
    const double rho = std::max(*reg_minus.condition_value, *reg_plus.condition_value);
    v.status = Status::Proven;
    v.condition_value = rho;
    v.margin = 1.0 - rho;
    return v;
  }
  v.status = Status::Inconclusive;
  if (reg_minus.condition_value && reg_plus.condition_value) {
    v.condition_value = std::max(*reg_minus.condition_value, *reg_plus.condition_value);
    v.margin = 1.0 - *v.condition_value;
  }
  v.note = (reg_minus.status == Status::Disproven || reg_plus.status == Status::Disproven)
               ? "a shifted midpoint failed to invert despite a clear spectrum"
               : "midpoint is Schur stable but shifted regularity is unresolved";
  return v;
}

}  // namespace pimcert
