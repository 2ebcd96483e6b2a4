#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/generic_prp.hpp"

#include <cmath>

using namespace prc;

TEST_CASE("validation of structural constants") {
  CHECK_NOTHROW(validate(so17_params()));
  CHECK_THROWS_AS(validate({0, 7, Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(validate({7, 7, Rational(1), Rational(0)}), std::invalid_argument);
  CHECK(is_trivial_p1({1, 2, Rational(0), Rational(1)}));
  CHECK_FALSE(is_trivial_p1(so17_params()));
}

TEST_CASE("SO(1,7)/G2 constants give the parabola 6 t2^2 + 6 t2 + 15/8") {
  const auto p = so17_params();
  for (const Rational t2 : {Rational(-1), Rational(-7, 6), Rational(-3, 4), Rational(-5)}) {
    const auto s = solve_T<Rational>(p, t2);
    CHECK(s.t1 == 6 * t2 * t2 + 6 * t2 + Rational(15, 8));
    const auto r = ric_diag<Rational>(p, s.lambda);
    CHECK(r.t1 == s.t1);
    CHECK(r.t2 == t2);
  }
  CHECK_THROWS_AS(solve_T<double>(p, -0.5), NotInImage);
}

TEST_CASE("ric_diag rejects nonpositive lambda") {
  CHECK_THROWS_AS(ric_diag<double>(so17_params(), 0.0), std::invalid_argument);
}

TEST_CASE("threshold of SO(1,7)/G2 is 6 - 3 sqrt5") {
  CHECK(ct_threshold(so17_params()) == doctest::Approx(6.0 - 3.0 * std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("cT inside the two-solution band") {
  const auto p = so17_params();
  const auto a = analyze_cT(p, 5.0 / 6.0, -7.0 / 6.0);
  REQUIRE(a.solution_count == 2);
  REQUIRE(a.plus);
  REQUIRE(a.minus);
  const double cs[] = {a.plus->c, a.minus->c};
  CHECK(std::min(cs[0], cs[1]) == doctest::Approx(45.0 / 98.0).epsilon(1e-12));
  CHECK(std::max(cs[0], cs[1]) == doctest::Approx(0.5).epsilon(1e-12));
  for (const auto& b : {*a.plus, *a.minus}) {
    CHECK(std::abs(ct_quadratic_residual(p, 5.0 / 6.0, -7.0 / 6.0, b.c)) < 1e-12);
    CHECK(ct_lambda(p, -7.0 / 6.0, b.c) == doctest::Approx(b.lambda));
  }
}

TEST_CASE("cT at the threshold has one double solution") {
  const auto p = so17_params();
  const double tau = ct_threshold(p);
  const auto a = analyze_cT(p, -tau, -1.0);
  CHECK(a.boundary);
  REQUIRE(a.plus);
  REQUIRE(a.minus);
  CHECK(std::abs(a.plus->c - a.minus->c) < 1e-9);
}

TEST_CASE("cT outside the cone has no solution") {
  const auto a = analyze_cT(so17_params(), 0.1, -1.0);  // t1/t2 = -0.1 > tau
  CHECK(a.solution_count == 0);
  CHECK_FALSE(a.plus);
  CHECK_THROWS_AS(analyze_cT(so17_params(), -1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(analyze_cT(so17_params(), 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("trivial p1: c = 1, lambda = 2 and the printed ratio is flagged") {
  const TwoSummandParams p{1, 2, Rational(0), Rational(1)};
  const auto a = analyze_cT(p, 1.0, -1.0);
  REQUIRE(a.plus);
  CHECK(a.trivial_p1);
  CHECK(a.plus->c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.plus->lambda == doctest::Approx(2.0).epsilon(1e-12));
  const auto r = ric_diag<double>(p, a.plus->lambda);
  CHECK(std::abs(r.t1 - 1.0) < 1e-12);
  CHECK(std::abs(r.t2 + 1.0) < 1e-12);
  CHECK(trivial_p1_printed_lambda(p, -1.0, 1.0) == doctest::Approx(1.0));
  REQUIRE_FALSE(a.diagnostics.empty());
}

TEST_CASE("product of symmetric spaces") {
  const auto t = product_case_solve(ProductMode::RicEqualsT, {-0.5, -0.5});
  CHECK(t.solvable);
  CHECK_FALSE(product_case_solve(ProductMode::RicEqualsT, {-0.5, -0.4}).solvable);
  const auto c = product_case_solve(ProductMode::RicEqualsCT, {-0.25, -0.25});
  REQUIRE(c.c);
  CHECK(*c.c == doctest::Approx(2.0));
  CHECK_FALSE(product_case_solve(ProductMode::RicEqualsCT, {0.25, 0.25}).solvable);
}
