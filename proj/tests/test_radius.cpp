#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "pimcert/radius.hpp"
#include "pimcert/verify.hpp"

using namespace pimcert;

namespace {

// Negated Hessian family of x1^4 + 2 x1^2 x2 - x1 x2 x3 + 3 x2 x3^2 + 5 x2^3
// over ([2,3], [1,2], [0,1]): Hurwitz stable, loses stability near r = 1.88.
ParametricMatrix negated_hessian() {
  const std::vector<ParametricMatrix::Parameter> params = {
      {"x1", Interval::make(2.0, 3.0)},
      {"x2", Interval::make(1.0, 2.0)},
      {"x3", Interval::make(0.0, 1.0)},
  };
  const char* rows[3][3] = {
      {"-(12*x1^2 + 4*x2)", "-(4*x1 - x3)", "x2"},
      {"-(4*x1 - x3)", "-(30*x2)", "-(6*x3 - x1)"},
      {"x2", "-(6*x3 - x1)", "-(6*x2)"},
  };
  std::vector<std::vector<Expr>> entries(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) entries[i].push_back(parse_expression(rows[i][j]));
  }
  return ParametricMatrix::build(entries, params);
}

ParametricMatrix family_1x1(double a0, std::vector<double> coeffs) {
  std::vector<DenseMatrix> cs;
  for (double c : coeffs) cs.push_back(DenseMatrix::from_rows({{c}}));
  return ParametricMatrix::from_coefficients(DenseMatrix::from_rows({{a0}}), std::move(cs));
}

}  // namespace

TEST_CASE("lambda_max_at_radius") {
  const ParametricMatrix m = family_1x1(-2.0, {1.0});
  CHECK(lambda_max_at_radius(m, 0.0).value == doctest::Approx(-2.0));
  CHECK(lambda_max_at_radius(m, 1.5).value == doctest::Approx(-0.5));
  CHECK(lambda_max_at_radius(m, 1.5).vertex.signs == std::vector<signed char>{+1});

  SUBCASE("non-decreasing in r") {
    const ParametricMatrix n = negated_hessian();
    double prev = -std::numeric_limits<double>::infinity();
    for (double r : {0.0, 0.3, 0.7, 1.0, 1.5, 1.9, 2.5}) {
      const double g = lambda_max_at_radius(n, r).value;
      CHECK(g >= prev - 1e-12);
      prev = g;
    }
  }
  SUBCASE("asymmetric family throws") {
    const ParametricMatrix bad = ParametricMatrix::from_coefficients(
        DenseMatrix::identity(2), {DenseMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})});
    CHECK_THROWS_AS(lambda_max_at_radius(bad, 1.0), NotSymmetric);
  }
}

TEST_CASE("stability radius of a 1x1 family is analytic") {
  // g(r) = -2 + r crosses zero at exactly 2.
  const ParametricMatrix m = family_1x1(-2.0, {1.0});
  const RadiusResult res = stability_radius(m);

  CHECK_FALSE(res.capped);
  CHECK_FALSE(res.midpoint_unstable);
  CHECK(res.s_lo == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(res.s_hi == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(res.s_lo < res.s_hi);
  CHECK(res.s_hi - res.s_lo <= 1e-6 * 1.001 + 1e-12);

  // Bracket invariants.
  RadiusOptions opts;
  CHECK(lambda_max_at_radius(m, res.s_lo).value < -opts.margin);
  CHECK(lambda_max_at_radius(m, res.s_hi).value >= -opts.margin);

  REQUIRE(res.witness.has_value());
  CHECK(res.witness->signs == std::vector<signed char>{+1});
  CHECK(res.witness_lambda_max == doctest::Approx(-2.0 + res.s_hi).epsilon(1e-9));
}

TEST_CASE("stability radius of the negated Hessian family") {
  const ParametricMatrix n = negated_hessian();
  const RadiusResult res = stability_radius(n);

  CHECK_FALSE(res.capped);
  CHECK_FALSE(res.midpoint_unstable);
  // Independent reference: the scaled family's extreme vertex eigenvalue
  // crosses zero at 1.8809013777237498.
  CHECK(res.s_lo == doctest::Approx(1.8809013777237498).epsilon(2e-6));
  CHECK(res.s_hi == doctest::Approx(1.8809013777237498).epsilon(2e-6));
  CHECK(res.s_hi - res.s_lo <= 1e-6 * 1.001);

  CHECK(lambda_max_at_radius(n, res.s_lo).value < -1e-9);
  CHECK(lambda_max_at_radius(n, res.s_hi).value >= -1e-9);

  // The destabilizing vertex is the one attaining the smallest eigenvalue of
  // the original (positive definite) family.
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->signs == std::vector<signed char>{-1, -1, +1, -1});

  SUBCASE("explicit bisection tolerance") {
    RadiusOptions tight;
    tight.bisect_tol = 1e-3;
    const RadiusResult coarse = stability_radius(n, tight);
    CHECK(coarse.s_hi - coarse.s_lo <= 1e-3 + 1e-12);
    CHECK(coarse.s_lo <= res.s_hi);
    CHECK(coarse.s_hi >= res.s_lo);
  }
}

TEST_CASE("unstable midpoint short-circuits") {
  SUBCASE("clearly unstable") {
    const RadiusResult res = stability_radius(family_1x1(1.0, {1.0}));
    CHECK(res.midpoint_unstable);
    CHECK(res.s_lo == 0.0);
    CHECK(res.s_hi == 0.0);
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.witness_lambda_max == doctest::Approx(1.0));
  }
  SUBCASE("marginally stable counts as unstable") {
    const RadiusResult res = stability_radius(family_1x1(0.0, {1.0}));
    CHECK(res.midpoint_unstable);
    CHECK(res.witness_lambda_max == doctest::Approx(0.0));
  }
}

TEST_CASE("radius capped at r_max") {
  SUBCASE("constant stable family never destabilizes") {
    const RadiusResult res = stability_radius(family_1x1(-1.0, {0.0}));
    CHECK(res.capped);
    CHECK(res.s_lo == 1e6);
    CHECK(std::isinf(res.s_hi));
    CHECK(res.witness_lambda_max == doctest::Approx(-1.0));
  }
  SUBCASE("custom r_max") {
    RadiusOptions opts;
    opts.r_max = 8.0;
    const RadiusResult res = stability_radius(family_1x1(-1.0, {0.0}), opts);
    CHECK(res.capped);
    CHECK(res.s_lo == 8.0);
    CHECK(std::isinf(res.s_hi));
  }
  SUBCASE("r_max must be positive") {
    RadiusOptions opts;
    opts.r_max = 0.0;
    CHECK_THROWS_AS(stability_radius(family_1x1(-1.0, {0.0}), opts), NegativeRadius);
    opts.r_max = -1.0;
    CHECK_THROWS_AS(stability_radius(family_1x1(-1.0, {0.0}), opts), NegativeRadius);
  }
}

TEST_CASE("radius respects the sufficient stability bound") {
  // Whenever the sufficient Hurwitz condition proves the family stable at
  // radius r, the computed radius must be at least r.
  const ParametricMatrix n = negated_hessian();
  const Verdict suff = check_hurwitz_sufficient(n);
  REQUIRE(suff.status == Status::Proven);

  const RadiusResult res = stability_radius(n);
  CHECK(res.s_hi > 1.0);  // the whole unit box is stable

  // Scaled down to half the box, stability must persist well past 1.
  const RadiusResult half = stability_radius(n.scaled(0.5));
  CHECK(half.s_lo == doctest::Approx(2.0 * res.s_lo).epsilon(1e-4));

  CHECK_THROWS_AS(stability_radius(ParametricMatrix::from_coefficients(
                      DenseMatrix::identity(2),
                      {DenseMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})})),
                  NotSymmetric);
}
