#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pimcert/problem.hpp"
#include "pimcert/report.hpp"
#include "pimcert/version.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pimcert::InvalidDocument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for parametric interval matrices: regularity, positive "
               "definiteness, Hurwitz/Schur stability and stability radius"};
  app.set_version_flag("--version", std::string(pimcert::kToolName) + " " + pimcert::kVersion);

  std::string input;
  app.add_option("input", input, "problem JSON file ('-' reads stdin)")->required();

  std::string method;
  app.add_option("--method", method, "check method: auto, sufficient or vertex")
      ->check(CLI::IsMember({"auto", "sufficient", "vertex"}));
  double tolerance = -1.0;
  app.add_option("--tolerance", tolerance, "margin around strict inequalities (default 1e-9)");
  double bisect_tol = -1.0;
  app.add_option("--bisect-tol", bisect_tol, "radius bracket width (default: automatic)");
  double r_max = -1.0;
  app.add_option("--r-max", r_max, "radius search cap (default 1e6)");
  int max_vertices = -1;
  app.add_option("--max-vertices", max_vertices, "vertex-enumeration symbol budget (default 20)");
  std::string output = "json";
  app.add_option("--output", output, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress the report, keep the exit code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 3;
  }

  try {
    pimcert::ProblemDocument doc = pimcert::parse_problem(read_input(input));
    if (!method.empty()) doc.options.method = pimcert::method_from_string(method);
    if (tolerance >= 0.0) doc.options.tolerance = tolerance;
    if (bisect_tol >= 0.0) doc.options.bisect_tol = bisect_tol;
    if (r_max >= 0.0) {
      if (r_max == 0.0) throw pimcert::InvalidDocument("--r-max must be positive");
      doc.options.r_max = r_max;
    }
    if (max_vertices >= 0) {
      if (max_vertices > 62) throw pimcert::InvalidDocument("--max-vertices must be at most 62");
      doc.options.max_vertices = max_vertices;
    }

    const pimcert::Report report = pimcert::run_checks(doc);
    if (!quiet) {
      std::cout << (output == "text" ? pimcert::to_text(report) : pimcert::to_json(report));
    }
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
