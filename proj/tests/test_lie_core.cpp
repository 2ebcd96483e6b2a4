#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/lie_core.hpp"

#include <cmath>

using namespace prc;

TEST_CASE("p basis lies in so(1,7) and is orthonormal, exactly") {
  const auto B = build_p_basis<QSqrt3>();
  for (int i = 0; i < kPDim; ++i) {
    CHECK(in_so17<QSqrt3>(B[i]));
    for (int j = 0; j < kPDim; ++j) CHECK(fixed_inner<QSqrt3>(B, B[i], B[j]) == QSqrt3(i == j ? 1 : 0));
  }
}

TEST_CASE("Killing form is 6 tr(XY)") {
  const auto basis = so17_full_basis<double>();
  REQUIRE(basis.size() == 28);
  for (std::size_t i = 0; i < basis.size(); i += 5)
    for (std::size_t j = 0; j < basis.size(); j += 3)
      CHECK(killing_form<double>(basis[i], basis[j]) == adjoint_trace_form<double>(basis[i], basis[j]));
  CHECK(killing_form<double>(basis[0], basis[0]) == doctest::Approx(6.0 * (basis[0] * basis[0]).trace()));
}

TEST_CASE("projection onto p recovers coordinates") {
  const auto B = build_p_basis<double>();
  Vec14<double> c;
  for (int i = 0; i < kPDim; ++i) c[i] = 0.3 * i - 1.0;
  const Mat8<double> X = from_p_coordinates<double>(B, c);
  CHECK((project_p<double>(B, X) - c).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(off_p_residual<double>(B, X).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("fixed inner product rejects matrices outside p") {
  const auto B = build_p_basis<double>();
  const auto full = so17_full_basis<double>();
  bool threw = false;
  for (const auto& M : full) {
    if (off_p_residual<double>(B, M).cwiseAbs().maxCoeff() > 1e-9) {
      CHECK_THROWS_AS(fixed_inner<double>(B, M, M), std::domain_error);
      threw = true;
      break;
    }
  }
  CHECK(threw);
}

TEST_CASE("structure sums are 7/6 on both summands") {
  const auto s = structure_sums(so17_structure<QSqrt3>());
  CHECK(s.d1 == 7);
  CHECK(s.d2 == 7);
  CHECK(s.p1_sum == QSqrt3(Rational(7, 6)));
  CHECK(s.p2_sum == QSqrt3(Rational(7, 6)));
  CHECK(s.p2_sum_from_p2p2 == s.p2_sum_from_p1p2);
}

TEST_CASE("oracle on the diagonal slice has no mixed term; singular maps are rejected") {
  const auto o = ric_oracle<double>(1.3, 0.7, 0.0);
  CHECK(o.max_deviation < 1e-12);
  CHECK(std::abs(o.ric.r3) < 1e-14);
  CHECK(o.ric.r1 > 0.0);
  CHECK(o.ric.r2 < 0.0);
  CHECK(o.diagnostics.empty());
  CHECK_THROWS_AS(ric_oracle<double>(1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("oracle golden point is exact in Q(sqrt3)") {
  // a = b = 1 + sqrt3/2, c = 1/2 squares to a multiple of [[1, 1/2], [1/2, 1]]
  const QSqrt3 a(Rational(1), Rational(1, 2));
  const auto o = ric_oracle<QSqrt3>(a, a, QSqrt3(Rational(1, 2)));
  CHECK(o.ric.r1 == QSqrt3(Rational(65, 108)));
  CHECK(o.ric.r2 == QSqrt3(Rational(-43, 108)));
  CHECK(o.ric.r3 == QSqrt3(Rational(-16, 27)));
  CHECK(o.max_deviation == 0.0);
}

TEST_CASE("the two metric conventions differ off the diagonal") {
  const auto inv = ric_oracle<double>(1.2, 0.8, 0.3, MetricConvention::InverseRoot);
  const auto root = ric_oracle<double>(1.2, 0.8, 0.3, MetricConvention::Root);
  CHECK(std::abs(inv.ric.r3 - root.ric.r3) > 1e-6);
}
