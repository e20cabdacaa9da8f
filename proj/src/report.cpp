#include "pimcert/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "pimcert/version.hpp"

namespace pimcert {

using ojson = nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// nlohmann's dump() emits shortest-round-trip doubles and null for
// non-finite values; reports pin 17 significant digits and readable strings
// for inf/nan instead, so numbers are rendered by hand.
void dump_json(const ojson& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        out += nlohmann::json(key).dump();
        out += ": ";
        dump_json(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Flat arrays of scalars stay on one line; nested ones break.
      bool scalar = true;
      for (const auto& v : j) {
        if (v.is_structured()) {
          scalar = false;
          break;
        }
      }
      if (scalar) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_json(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad_in;
        dump_json(j[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case ojson::value_t::string:
      out += nlohmann::json(j.get<std::string>()).dump();
      return;
    case ojson::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case ojson::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case ojson::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case ojson::value_t::number_float:
      out += fmt_double(j.get<double>());
      return;
    default:
      out += "null";
      return;
  }
}

ojson matrix_json(const DenseMatrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.dim(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson certificate_json(const CheckRecord& rec) {
  const Verdict& v = rec.verdict;
  ojson cert = ojson::object();
  if (rec.radius) {
    const RadiusResult& rr = *rec.radius;
    cert["s_lo"] = rr.s_lo;
    cert["s_hi"] = rr.s_hi;
    cert["capped"] = rr.capped;
    cert["midpoint_unstable"] = rr.midpoint_unstable;
    if (rr.witness) {
      ojson signs = ojson::array();
      for (const signed char s : rr.witness->signs) signs.push_back(static_cast<int>(s));
      cert["witness_vertex"] = std::move(signs);
      cert["witness_lambda_max"] = rr.witness_lambda_max;
    }
  }
  if (v.condition_value) cert["condition_value"] = *v.condition_value;
  if (v.margin) cert["margin"] = *v.margin;
  for (const auto& [key, value] : v.certificate) cert[key] = value;
  if (v.witness) {
    ojson w = ojson::array();
    for (const double e : *v.witness) w.push_back(e);
    cert["witness"] = std::move(w);
  }
  if (v.witness_eigenvalue) cert["witness_eigenvalue"] = *v.witness_eigenvalue;
  if (!v.note.empty()) cert["note"] = v.note;
  return cert;
}

ojson report_json_tree(const Report& rep) {
  ojson root = ojson::object();
  root["tool"] = kToolName;
  root["version"] = kVersion;

  ojson fam = ojson::object();
  fam["n"] = rep.family.dim();
  fam["num_symbols"] = static_cast<std::uint64_t>(rep.family.num_symbols());
  ojson syms = ojson::array();
  for (const auto& s : rep.family.symbols()) syms.push_back(s);
  fam["symbols"] = std::move(syms);
  fam["midpoint"] = matrix_json(rep.family.midpoint());
  ojson coeffs = ojson::array();
  for (std::size_t k = 0; k < rep.family.num_symbols(); ++k) {
    coeffs.push_back(matrix_json(rep.family.coefficient(k)));
  }
  fam["coefficients"] = std::move(coeffs);
  root["family"] = std::move(fam);

  ojson opts = ojson::object();
  opts["method"] = to_string(rep.options.method);
  opts["tolerance"] = rep.options.tolerance;
  opts["bisect_tol"] = rep.options.bisect_tol;
  opts["r_max"] = rep.options.r_max;
  opts["max_vertices"] = rep.options.max_vertices;
  root["options"] = std::move(opts);

  ojson checks = ojson::array();
  for (const CheckRecord& rec : rep.records) {
    ojson c = ojson::object();
    c["check"] = to_string(rec.kind);
    c["method"] = rec.method;
    c["status"] = to_string(rec.verdict.status);
    c["certificate"] = certificate_json(rec);
    c["time_ms"] = rec.time_ms;
    checks.push_back(std::move(c));
  }
  root["checks"] = std::move(checks);
  root["exit_code"] = rep.exit_code();
  return root;
}

Verdict radius_verdict(const ParametricMatrix& family, const RadiusResult& rr,
                       const ProblemOptions& options) {
  Verdict v;
  const double delta = options.tolerance;
  if (rr.midpoint_unstable) {
    v.status = Status::Disproven;
    v.witness = std::vector<double>(family.num_symbols(), 0.0);
    v.witness_eigenvalue = rr.witness_lambda_max;
    v.note = "midpoint matrix is not stable, the stability radius is 0";
    return v;
  }
  v.condition_value = rr.s_lo;
  v.margin = rr.s_lo - 1.0;
  if (rr.capped) {
    v.status = rr.s_lo >= 1.0 ? Status::Proven : Status::Inconclusive;
    v.note = "no instability found up to r_max";
    return v;
  }
  if (rr.s_lo > 1.0) {
    v.status = Status::Proven;
    v.note = "the unit box lies strictly inside the stability region";
    return v;
  }
  if (rr.s_hi < 1.0) {
    // The bracket ends below the unit box.  The recorded witness may sit in
    // the margin band; probing halfway between s_hi and 1 gives a clean
    // violation when one exists (g is non-decreasing).
    if (rr.witness && rr.witness_lambda_max > delta) {
      std::vector<double> eps = rr.witness->as_doubles();
      for (double& e : eps) e *= rr.s_hi;
      v.status = Status::Disproven;
      v.witness = std::move(eps);
      v.witness_eigenvalue = rr.witness_lambda_max;
      v.note = "an unstable member exists inside the box";
      return v;
    }
    RadiusOptions ropts;
    ropts.margin = options.tolerance;
    ropts.max_symbols = options.max_vertices;
    const double probe = 0.5 * (rr.s_hi + 1.0);
    const LambdaMaxResult g = lambda_max_at_radius(family, probe, ropts);
    if (g.value > delta) {
      std::vector<double> eps = g.vertex.as_doubles();
      for (double& e : eps) e *= probe;
      v.status = Status::Disproven;
      v.witness = std::move(eps);
      v.witness_eigenvalue = g.value;
      v.note = "an unstable member exists inside the box";
      return v;
    }
    v.status = Status::Inconclusive;
    v.note = "the stability boundary is marginally inside the box";
    return v;
  }
  v.status = Status::Inconclusive;
  v.note = "the stability boundary crosses the box scale within tolerance";
  return v;
}

}  // namespace

int Report::exit_code() const {
  bool inconclusive = false;
  for (const CheckRecord& rec : records) {
    if (rec.verdict.status == Status::Disproven) return 1;
    if (rec.verdict.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

Report run_checks(const ProblemDocument& doc) {
  return run_checks(build_family(doc), doc.checks, doc.options);
}

Report run_checks(const ParametricMatrix& family, const std::vector<CheckKind>& checks,
                  const ProblemOptions& options) {
  Report rep{family, options, {}};
  CheckOptions copts;
  copts.margin = options.tolerance;
  copts.max_symbols = options.max_vertices;

  using SuffFn = Verdict (*)(const ParametricMatrix&, const CheckOptions&);
  const auto run_property = [&](SuffFn sufficient, SuffFn vertex, CheckRecord& rec) {
    switch (options.method) {
      case Method::Sufficient:
        rec.method = "sufficient";
        rec.verdict = sufficient(family, copts);
        return;
      case Method::Vertex:
        rec.method = "vertex";
        rec.verdict = vertex(family, copts);
        return;
      case Method::Auto: {
        rec.method = "sufficient";
        rec.verdict = sufficient(family, copts);
        if (rec.verdict.status != Status::Inconclusive) return;
        const auto append_note = [&rec](const std::string& extra) {
          if (!rec.verdict.note.empty()) rec.verdict.note += "; ";
          rec.verdict.note += extra;
        };
        if (!family.is_symmetric()) {
          append_note("vertex fallback unavailable: family is not symmetric");
          return;
        }
        if (family.num_symbols() > static_cast<std::size_t>(options.max_vertices)) {
          append_note("vertex fallback skipped: vertex count exceeds the budget");
          return;
        }
        rec.method = "vertex (fallback)";
        rec.verdict = vertex(family, copts);
        return;
      }
    }
  };

  for (const CheckKind kind : checks) {
    CheckRecord rec;
    rec.kind = kind;
    const auto t0 = std::chrono::steady_clock::now();
    switch (kind) {
      case CheckKind::Regularity:
        if (options.method == Method::Vertex) {
          throw InvalidDocument("the regularity check has no vertex method");
        }
        rec.method = "sufficient";
        rec.verdict = check_regularity_sufficient(family, copts);
        break;
      case CheckKind::PositiveDefinite:
        run_property(&check_pd_sufficient, &check_pd_vertex, rec);
        break;
      case CheckKind::Hurwitz:
        run_property(&check_hurwitz_sufficient, &check_hurwitz_vertex, rec);
        break;
      case CheckKind::Schur:
        run_property(&check_schur_sufficient, &check_schur_vertex, rec);
        break;
      case CheckKind::Radius: {
        rec.method = "bisection";
        RadiusOptions ropts;
        ropts.bisect_tol = options.bisect_tol;
        ropts.r_max = options.r_max;
        ropts.margin = options.tolerance;
        ropts.max_symbols = options.max_vertices;
        const RadiusResult rr = stability_radius(family, ropts);
        rec.radius = rr;
        rec.verdict = radius_verdict(family, rr, options);
        break;
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

std::string to_json(const Report& report) {
  std::string out;
  dump_json(report_json_tree(report), out, 0);
  out += "\n";
  return out;
}

std::string to_text(const Report& report) {
  std::string out;
  out += std::string(kToolName) + " " + kVersion + "\n";
  out += "family: n=" + std::to_string(report.family.dim()) +
         ", symbols=" + std::to_string(report.family.num_symbols()) + " [";
  for (std::size_t k = 0; k < report.family.symbols().size(); ++k) {
    if (k) out += ", ";
    out += report.family.symbols()[k];
  }
  out += "]\n";

  char buf[64];
  for (const CheckRecord& rec : report.records) {
    out += "check " + std::string(to_string(rec.kind)) + " [" + rec.method +
           "]: " + to_string(rec.verdict.status) + "\n";
    const ojson cert = certificate_json(rec);
    for (const auto& [key, value] : cert.items()) {
      std::string rendered;
      dump_json(value, rendered, 1);
      out += "  " + key + " = " + rendered + "\n";
    }
    std::snprintf(buf, sizeof buf, "  time = %.3f ms\n", rec.time_ms);
    out += buf;
  }
  out += "exit code: " + std::to_string(report.exit_code()) + "\n";
  return out;
}

}  // namespace pimcert
