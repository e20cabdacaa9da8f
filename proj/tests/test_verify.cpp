#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "pimcert/verify.hpp"

using namespace pimcert;

namespace {

// Hessian family of x1^4 + 2 x1^2 x2 - x1 x2 x3 + 3 x2 x3^2 + 5 x2^3 over
// ([2,3], [1,2], [0,1]); see test_pmatrix.cpp.  Strongly positive definite.
ParametricMatrix hessian_family() {
  const std::vector<ParametricMatrix::Parameter> params = {
      {"x1", Interval::make(2.0, 3.0)},
      {"x2", Interval::make(1.0, 2.0)},
      {"x3", Interval::make(0.0, 1.0)},
  };
  const char* rows[3][3] = {
      {"12*x1^2 + 4*x2", "4*x1 - x3", "-x2"},
      {"4*x1 - x3", "30*x2", "6*x3 - x1"},
      {"-x2", "6*x3 - x1", "6*x2"},
  };
  std::vector<std::vector<Expr>> entries(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) entries[i].push_back(parse_expression(rows[i][j]));
  }
  return ParametricMatrix::build(entries, params);
}

// Same family with every matrix multiplied by f (midpoint included).
ParametricMatrix scale_family(const ParametricMatrix& m, double f) {
  std::vector<DenseMatrix> cs;
  for (std::size_t k = 0; k < m.num_symbols(); ++k) cs.push_back(f * m.coefficient(k));
  std::vector<std::string> names = m.symbols();
  return ParametricMatrix::from_coefficients(f * m.midpoint(), std::move(cs), std::move(names));
}

ParametricMatrix family_1x1(double a0, std::vector<double> coeffs) {
  std::vector<DenseMatrix> cs;
  for (double c : coeffs) cs.push_back(DenseMatrix::from_rows({{c}}));
  return ParametricMatrix::from_coefficients(DenseMatrix::from_rows({{a0}}), std::move(cs));
}

double cert_value(const Verdict& v, const std::string& key) {
  for (const auto& [k, val] : v.certificate) {
    if (k == key) return val;
  }
  FAIL("certificate key not found: " << key);
  return 0.0;
}

double extreme_eig(const ParametricMatrix& m, const std::vector<double>& eps, bool want_max) {
  const std::vector<double> eig = sym_eigenvalues(m.instantiate(eps));
  return want_max ? eig.back() : eig.front();
}

}  // namespace

TEST_CASE("sufficient regularity") {
  SUBCASE("proven on the Hessian family") {
    const Verdict v = check_regularity_sufficient(hessian_family());
    CHECK(v.status == Status::Proven);
    REQUIRE(v.condition_value.has_value());
    CHECK(*v.condition_value == doctest::Approx(0.6120220462648368).epsilon(1e-9));
    CHECK(*v.margin == doctest::Approx(1.0 - 0.6120220462648368).epsilon(1e-9));
  }
  SUBCASE("singular midpoint disproves with the zero witness") {
    const ParametricMatrix m = ParametricMatrix::from_coefficients(
        DenseMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}}),
        {DenseMatrix::from_rows({{0.1, 0.0}, {0.0, 0.1}})});
    const Verdict v = check_regularity_sufficient(m);
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>{0.0});
    CHECK(*v.witness_eigenvalue == 0.0);
    CHECK(v.note == "midpoint matrix is singular");
  }
  SUBCASE("spectral radius at or above one is inconclusive, not disproven") {
    const ParametricMatrix m = ParametricMatrix::from_coefficients(
        DenseMatrix::identity(2), {DenseMatrix::from_rows({{2.0, 0.0}, {0.0, 2.0}})});
    const Verdict v = check_regularity_sufficient(m);
    CHECK(v.status == Status::Inconclusive);
    CHECK(*v.condition_value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(v.note.find("not below 1") != std::string::npos);
  }
  SUBCASE("non-converging radius estimate is inconclusive") {
    // |A0^-1| B = [[0,1],[4,0]] makes the power iteration oscillate.
    const ParametricMatrix m = ParametricMatrix::from_coefficients(
        DenseMatrix::identity(2), {DenseMatrix::from_rows({{0.0, 1.0}, {4.0, 0.0}})});
    const Verdict v = check_regularity_sufficient(m);
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.note.find("did not converge") != std::string::npos);
  }
  SUBCASE("works on non-symmetric families") {
    const ParametricMatrix m = ParametricMatrix::from_coefficients(
        DenseMatrix::from_rows({{2.0, 1.0}, {0.0, 2.0}}),
        {DenseMatrix::from_rows({{0.1, 0.0}, {0.1, 0.1}})});
    CHECK(check_regularity_sufficient(m).status == Status::Proven);
  }
}

TEST_CASE("sufficient positive definiteness") {
  SUBCASE("proven on the Hessian family with the regularity certificate") {
    const Verdict v = check_pd_sufficient(hessian_family());
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(0.6120220462648368).epsilon(1e-9));
  }
  SUBCASE("indefinite midpoint disproves") {
    const ParametricMatrix m = ParametricMatrix::from_coefficients(
        DenseMatrix::from_rows({{-1.0, 0.0}, {0.0, 1.0}}), {});
    const Verdict v = check_pd_sufficient(m);
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>{});
    CHECK(*v.witness_eigenvalue == doctest::Approx(-1.0));
    CHECK(v.note == "midpoint matrix is not positive definite");
  }
  SUBCASE("marginally definite midpoint is inconclusive") {
    const Verdict v = check_pd_sufficient(family_1x1(0.0, {}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.note == "midpoint matrix is only marginally definite");
  }
  SUBCASE("wide envelope leaves the check inconclusive") {
    const Verdict v = check_pd_sufficient(family_1x1(1.0, {3.0}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(*v.condition_value == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(v.note.find("regularity is unresolved") != std::string::npos);
  }
}

TEST_CASE("vertex positive definiteness") {
  const ParametricMatrix H = hessian_family();

  SUBCASE("proven with the extremal vertex as witness") {
    const Verdict v = check_pd_vertex(H);
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(5.244955134362875).epsilon(1e-10));
    CHECK(*v.margin == *v.condition_value);
    CHECK(v.witness == std::vector<double>{-1.0, -1.0, 1.0, -1.0});  // vertex index 2
    CHECK(*v.witness_eigenvalue == *v.condition_value);
    CHECK(cert_value(v, "lambda_min") == *v.condition_value);
  }
  SUBCASE("doubled box is no longer definite everywhere") {
    const Verdict v = check_pd_vertex(H.scaled(2.0));
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>{-1.0, -1.0, 1.0, -1.0});
    CHECK(*v.witness_eigenvalue == doctest::Approx(-0.9711414539369513).epsilon(1e-9));
    CHECK(v.note == "a vertex matrix has an eigenvalue below 0");
    // The witness reproduces the violation on re-instantiation.
    CHECK(extreme_eig(H.scaled(2.0), *v.witness, false) ==
          doctest::Approx(*v.witness_eigenvalue).epsilon(1e-12));
  }
  SUBCASE("non-symmetric family throws") {
    const ParametricMatrix m = ParametricMatrix::from_coefficients(
        DenseMatrix::identity(2), {DenseMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})});
    CHECK_THROWS_AS(check_pd_vertex(m), NotSymmetric);
  }
}

TEST_CASE("Hurwitz checks") {
  const ParametricMatrix H = hessian_family();
  const ParametricMatrix N = scale_family(H, -1.0);  // negated: stable family

  SUBCASE("sufficient check disproves on an unstable midpoint") {
    const Verdict v = check_hurwitz_sufficient(H);
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>(4, 0.0));
    CHECK(*v.witness_eigenvalue == doctest::Approx(84.79313079342275).epsilon(1e-10));
    CHECK(v.note == "midpoint matrix is not Hurwitz stable");
  }
  SUBCASE("sufficient check proves the negated family") {
    const Verdict v = check_hurwitz_sufficient(N);
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(0.6120220462648368).epsilon(1e-9));
    CHECK(cert_value(v, "midpoint_lambda_max") ==
          doctest::Approx(-8.955582540430795).epsilon(1e-10));
  }
  SUBCASE("sufficient check is inconclusive on a marginal midpoint") {
    CHECK(check_hurwitz_sufficient(family_1x1(0.0, {})).status == Status::Inconclusive);
  }
  SUBCASE("sufficient check is inconclusive when regularity fails") {
    const Verdict v = check_hurwitz_sufficient(family_1x1(-1.0, {3.0}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.note.find("regularity is unresolved") != std::string::npos);
  }
  SUBCASE("vertex check disproves the positive definite family at the first vertex") {
    const Verdict v = check_hurwitz_vertex(H);
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>(4, -1.0));
    CHECK(*v.witness_eigenvalue == doctest::Approx(51.97730028511392).epsilon(1e-10));
    CHECK(v.note == "a vertex matrix has an eigenvalue above 0");
  }
  SUBCASE("vertex check proves the negated family") {
    const Verdict v = check_hurwitz_vertex(N);
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(-5.244955134362875).epsilon(1e-10));
    CHECK(*v.margin == doctest::Approx(5.244955134362875).epsilon(1e-10));
    CHECK(v.witness == std::vector<double>{-1.0, -1.0, 1.0, -1.0});
    CHECK(cert_value(v, "lambda_max") == *v.condition_value);
  }
  SUBCASE("witnesses reproduce their eigenvalues") {
    const Verdict v = check_hurwitz_vertex(H);
    CHECK(extreme_eig(H, *v.witness, true) ==
          doctest::Approx(*v.witness_eigenvalue).epsilon(1e-12));
  }
}

TEST_CASE("Hurwitz via a stable sample plus regularity") {
  SUBCASE("proven from the midpoint sample") {
    const ParametricMatrix N = scale_family(hessian_family(), -1.0);
    const Verdict v = check_hurwitz_via_regularity(N);
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(0.6120220462648368).epsilon(1e-9));
    CHECK(cert_value(v, "sample_lambda_max") ==
          doctest::Approx(-8.955582540430795).epsilon(1e-10));
  }
  SUBCASE("unstable sample is a direct counterexample") {
    const Verdict v = check_hurwitz_via_regularity(family_1x1(-0.5, {1.0}), std::vector<double>{1.0});
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>{1.0});
    CHECK(*v.witness_eigenvalue == doctest::Approx(0.5));
    CHECK(v.note == "sample member is not Hurwitz stable");
  }
  SUBCASE("stable sample but singular midpoint disproves through the midpoint") {
    const Verdict v = check_hurwitz_via_regularity(family_1x1(0.0, {1.0}), std::vector<double>{-1.0});
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>{0.0});
    CHECK(*v.witness_eigenvalue == 0.0);
    CHECK(v.note == "midpoint matrix is singular, hence not Hurwitz stable");
  }
  SUBCASE("stable sample with unresolved regularity is inconclusive") {
    const Verdict v = check_hurwitz_via_regularity(family_1x1(-0.5, {1.0}), std::vector<double>{0.0});
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.note.find("regularity is unresolved") != std::string::npos);
  }
}

TEST_CASE("Schur checks on the scaled Hessian families") {
  const ParametricMatrix H = hessian_family();
  const ParametricMatrix S100 = scale_family(H, 0.01);  // some vertices cross 1
  const ParametricMatrix S150 = scale_family(H, 1.0 / 150.0);  // everything inside

  SUBCASE("vertex check disproves the 1/100 family at vertex 8") {
    const Verdict v = check_schur_vertex(S100);
    CHECK(v.status == Status::Disproven);
    CHECK(v.witness == std::vector<double>{1.0, -1.0, -1.0, -1.0});
    CHECK(*v.witness_eigenvalue == doctest::Approx(1.1080209150642333).epsilon(1e-10));
    CHECK(v.note == "a vertex matrix has an eigenvalue above 1");
    CHECK(extreme_eig(S100, *v.witness, true) ==
          doctest::Approx(*v.witness_eigenvalue).epsilon(1e-12));
  }
  SUBCASE("vertex check proves the 1/150 family") {
    const Verdict v = check_schur_vertex(S150);
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(0.7901652567151346).epsilon(1e-10));
    CHECK(*v.margin == doctest::Approx(1.0 - 0.7901652567151346).epsilon(1e-9));
    CHECK(v.witness == std::vector<double>{1.0, 1.0, -1.0, 1.0});  // vertex index 13
    CHECK(cert_value(v, "lambda_min") == doctest::Approx(0.034966367562419165).epsilon(1e-9));
    CHECK(cert_value(v, "lambda_max") == doctest::Approx(0.7901652567151346).epsilon(1e-10));
  }
  SUBCASE("Schur via the two Hurwitz shifts agrees on both families") {
    const Verdict bad = check_schur_via_hurwitz(S100);
    CHECK(bad.status == Status::Disproven);
    CHECK(bad.witness == std::vector<double>{1.0, -1.0, -1.0, -1.0});
    CHECK(*bad.witness_eigenvalue == doctest::Approx(1.1080209150642333).epsilon(1e-9));
    CHECK(bad.note == "a vertex matrix has an eigenvalue above 1");

    const Verdict good = check_schur_via_hurwitz(S150);
    CHECK(good.status == Status::Proven);
    CHECK(*good.condition_value == doctest::Approx(0.7901652567151346).epsilon(1e-9));
    CHECK(cert_value(good, "lambda_min") ==
          doctest::Approx(0.034966367562419165).epsilon(1e-8));
    CHECK(cert_value(good, "lambda_max") == doctest::Approx(0.7901652567151346).epsilon(1e-9));
  }
  SUBCASE("sufficient check proves 1/150 via both shifted regularities") {
    const Verdict v = check_schur_sufficient(S150);
    CHECK(v.status == Status::Proven);
    CHECK(*v.condition_value == doctest::Approx(0.5177816153862134).epsilon(1e-8));
    CHECK(cert_value(v, "midpoint_spectral_bound") ==
          doctest::Approx(0.5652875386228188).epsilon(1e-10));
    CHECK(cert_value(v, "rho_shift_minus") == doctest::Approx(0.5177816153862134).epsilon(1e-8));
    CHECK(cert_value(v, "rho_shift_plus") == doctest::Approx(0.14939846816375363).epsilon(1e-8));
  }
  SUBCASE("sufficient check cannot decide 1/100") {
    const Verdict v = check_schur_sufficient(S100);
    CHECK(v.status == Status::Inconclusive);
    CHECK(cert_value(v, "midpoint_spectral_bound") ==
          doctest::Approx(0.8479313079342278).epsilon(1e-10));
    CHECK(cert_value(v, "rho_shift_minus") == doctest::Approx(2.2163273944294897).epsilon(1e-8));
    CHECK(cert_value(v, "rho_shift_plus") == doctest::Approx(0.19277592883650685).epsilon(1e-8));
    CHECK(v.note == "midpoint is Schur stable but shifted regularity is unresolved");
  }
  SUBCASE("sufficient check disproves an unstable midpoint") {
    const Verdict v = check_schur_sufficient(family_1x1(1.5, {}));
    CHECK(v.status == Status::Disproven);
    CHECK(*v.witness_eigenvalue == doctest::Approx(1.5));
    CHECK(v.note == "midpoint matrix is not Schur stable");
  }
  SUBCASE("marginal midpoint is inconclusive") {
    const Verdict v = check_schur_sufficient(family_1x1(-1.0, {}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(*v.witness_eigenvalue == doctest::Approx(-1.0));
    CHECK(v.note == "midpoint matrix is only marginally Schur stable");
  }
  SUBCASE("marginal vertex leaves the shift route inconclusive") {
    const Verdict v = check_schur_via_hurwitz(family_1x1(0.0, {1.0}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.note == "a vertex eigenvalue lies within the margin of the unit circle");
  }
}

TEST_CASE("symmetric-only checks reject asymmetric families") {
  const ParametricMatrix m = ParametricMatrix::from_coefficients(
      DenseMatrix::identity(2), {DenseMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})});
  CHECK_THROWS_AS(check_hurwitz_sufficient(m), NotSymmetric);
  CHECK_THROWS_AS(check_hurwitz_vertex(m), NotSymmetric);
  CHECK_THROWS_AS(check_hurwitz_via_regularity(m), NotSymmetric);
  CHECK_THROWS_AS(check_schur_vertex(m), NotSymmetric);
  CHECK_THROWS_AS(check_schur_via_hurwitz(m), NotSymmetric);
  CHECK_THROWS_AS(check_schur_sufficient(m), NotSymmetric);
}

TEST_CASE("vertex and sufficient checks never contradict each other") {
  // Wherever the sufficient condition proves a property, the exact vertex
  // test must prove it as well (both families here are symmetric).
  const ParametricMatrix N = scale_family(hessian_family(), -1.0);
  CHECK(check_hurwitz_sufficient(N).status == Status::Proven);
  CHECK(check_hurwitz_vertex(N).status == Status::Proven);

  const ParametricMatrix S150 = scale_family(hessian_family(), 1.0 / 150.0);
  CHECK(check_schur_sufficient(S150).status == Status::Proven);
  CHECK(check_schur_vertex(S150).status == Status::Proven);
  CHECK(check_pd_sufficient(hessian_family()).status == Status::Proven);
  CHECK(check_pd_vertex(hessian_family()).status == Status::Proven);
}
