#include "pimcert/problem.hpp"

#include <json.hpp>

namespace pimcert {

using ojson = nlohmann::ordered_json;

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Regularity:
      return "regularity";
    case CheckKind::PositiveDefinite:
      return "positive-definite";
    case CheckKind::Hurwitz:
      return "hurwitz";
    case CheckKind::Schur:
      return "schur";
    default:
      return "radius";
  }
}

CheckKind check_kind_from_string(const std::string& s) {
  if (s == "regularity") return CheckKind::Regularity;
  if (s == "positive-definite") return CheckKind::PositiveDefinite;
  if (s == "hurwitz") return CheckKind::Hurwitz;
  if (s == "schur") return CheckKind::Schur;
  if (s == "radius") return CheckKind::Radius;
  throw InvalidDocument("unknown check '" + s +
                        "' (expected regularity, positive-definite, hurwitz, schur or radius)");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Auto:
      return "auto";
    case Method::Sufficient:
      return "sufficient";
    default:
      return "vertex";
  }
}

Method method_from_string(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "sufficient") return Method::Sufficient;
  if (s == "vertex") return Method::Vertex;
  throw InvalidDocument("unknown method '" + s + "' (expected auto, sufficient or vertex)");
}

namespace {

void require_keys(const ojson& obj, const char* path,
                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw InvalidDocument(std::string(path) + ": unknown key '" + key + "'");
  }
}

double number_at(const ojson& j, const std::string& path) {
  if (!j.is_number()) throw InvalidDocument(path + ": expected a number");
  return j.get<double>();
}

}  // namespace

ProblemDocument parse_problem(const std::string& json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidDocument(std::string("JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) throw InvalidDocument("document root must be an object");
  require_keys(j, "document", {"parameters", "matrix", "checks", "options"});

  ProblemDocument doc;

  if (j.contains("parameters")) {
    const ojson& params = j["parameters"];
    if (!params.is_array()) throw InvalidDocument("/parameters: expected an array");
    for (std::size_t k = 0; k < params.size(); ++k) {
      const std::string path = "/parameters/" + std::to_string(k);
      const ojson& p = params[k];
      if (!p.is_object()) throw InvalidDocument(path + ": expected an object");
      require_keys(p, path.c_str(), {"name", "interval"});
      if (!p.contains("name") || !p["name"].is_string()) {
        throw InvalidDocument(path + ": missing string field 'name'");
      }
      if (!p.contains("interval") || !p["interval"].is_array() || p["interval"].size() != 2) {
        throw InvalidDocument(path + ": 'interval' must be a [lo, hi] pair");
      }
      const double lo = number_at(p["interval"][0], path + "/interval/0");
      const double hi = number_at(p["interval"][1], path + "/interval/1");
      try {
        doc.parameters.push_back({p["name"].get<std::string>(), Interval::make(lo, hi)});
      } catch (const MalformedInterval& e) {
        throw InvalidDocument(path + "/interval: " + e.what());
      }
    }
  }

  if (!j.contains("matrix")) throw InvalidDocument("document is missing 'matrix'");
  const ojson& mat = j["matrix"];
  if (!mat.is_array() || mat.empty()) {
    throw InvalidDocument("/matrix: expected a nonempty array of rows");
  }
  for (std::size_t i = 0; i < mat.size(); ++i) {
    const ojson& row = mat[i];
    if (!row.is_array() || row.size() != mat.size()) {
      throw InvalidDocument("/matrix/" + std::to_string(i) +
                            ": matrix must be square (every row as long as there are rows)");
    }
    std::vector<std::string> entries;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_string()) {
        throw InvalidDocument("/matrix/" + std::to_string(i) + "/" + std::to_string(c) +
                              ": expected an expression string");
      }
      entries.push_back(row[c].get<std::string>());
    }
    doc.matrix.push_back(std::move(entries));
  }

  if (!j.contains("checks")) throw InvalidDocument("document is missing 'checks'");
  const ojson& checks = j["checks"];
  if (!checks.is_array() || checks.empty()) {
    throw InvalidDocument("/checks: expected a nonempty array of check names");
  }
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (!checks[k].is_string()) {
      throw InvalidDocument("/checks/" + std::to_string(k) + ": expected a string");
    }
    doc.checks.push_back(check_kind_from_string(checks[k].get<std::string>()));
  }

  if (j.contains("options")) {
    const ojson& o = j["options"];
    if (!o.is_object()) throw InvalidDocument("/options: expected an object");
    require_keys(o, "/options",
                 {"method", "tolerance", "bisect_tol", "r_max", "max_vertices"});
    if (o.contains("method")) {
      if (!o["method"].is_string()) throw InvalidDocument("/options/method: expected a string");
      doc.options.method = method_from_string(o["method"].get<std::string>());
    }
    if (o.contains("tolerance")) {
      doc.options.tolerance = number_at(o["tolerance"], "/options/tolerance");
      if (!(doc.options.tolerance >= 0.0)) {
        throw InvalidDocument("/options/tolerance: must be nonnegative");
      }
    }
    if (o.contains("bisect_tol")) {
      doc.options.bisect_tol = number_at(o["bisect_tol"], "/options/bisect_tol");
      if (!(doc.options.bisect_tol >= 0.0)) {
        throw InvalidDocument("/options/bisect_tol: must be nonnegative (0 = automatic)");
      }
    }
    if (o.contains("r_max")) {
      doc.options.r_max = number_at(o["r_max"], "/options/r_max");
      if (!(doc.options.r_max > 0.0)) throw InvalidDocument("/options/r_max: must be positive");
    }
    if (o.contains("max_vertices")) {
      if (!o["max_vertices"].is_number_integer()) {
        throw InvalidDocument("/options/max_vertices: expected an integer");
      }
      doc.options.max_vertices = o["max_vertices"].get<int>();
      if (doc.options.max_vertices < 0 || doc.options.max_vertices > 62) {
        throw InvalidDocument("/options/max_vertices: must be between 0 and 62");
      }
    }
  }
  return doc;
}

ParametricMatrix build_family(const ProblemDocument& doc) {
  const std::size_t n = doc.matrix.size();
  std::vector<std::vector<Expr>> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < doc.matrix[i].size(); ++c) {
      try {
        entries[i].push_back(parse_expression(doc.matrix[i][c]));
      } catch (const ParseError& e) {
        throw InvalidDocument("matrix[" + std::to_string(i) + "][" + std::to_string(c) +
                              "]: " + e.what());
      }
    }
  }
  // Evaluation errors (unbound parameters, domain violations) keep their
  // type; the parameter or operation is named in the message.
  return ParametricMatrix::build(entries, doc.parameters);
}

}  // namespace pimcert
