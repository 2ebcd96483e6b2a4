#pragma once

// ric = T and ric = cT for invariant metrics x1 <,>_1 + x2 <,>_2 on a space
// with two inequivalent isotropy summands, in terms of the structural
// constants (d1, d2, p1, p2) and the ratio lambda = x1 / x2.

#include "prc/qsqrt3.hpp"

#include <optional>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

namespace prc {

struct TwoSummandParams {
  int d1 = 0;
  int d2 = 0;
  Rational p1{0};
  Rational p2{0};
};

// Thrown for inputs outside the image of the Ricci map.
class NotInImage : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Throws std::invalid_argument when the structural constants are inadmissible.
void validate(const TwoSummandParams& p);

// p1 = 0 and p2 = d1 = 1: the first summand is a trivial representation.
bool is_trivial_p1(const TwoSummandParams& p);

// Constants of the space (7, 7, 7/6, 7/6) used for SO(1,7)/G2 diagonal metrics.
TwoSummandParams so17_params();

template <class S>
S as_scalar(const Rational& r) {
  if constexpr (std::is_same_v<S, double>) return static_cast<double>(r);
  else return S(r);
}

template <class S>
struct DiagTensor {
  S t1;
  S t2;
};

// 2 d1 - p1 - 2 p2, the numerator of the constant term of r1
template <class S>
S r1_offset(const TwoSummandParams& p) {
  return as_scalar<S>(Rational(2 * p.d1) - p.p1 - 2 * p.p2);
}

template <class S>
DiagTensor<S> ric_diag(const TwoSummandParams& p, const S& lambda) {
  validate(p);
  if (!(lambda > S(0))) throw std::invalid_argument("ric_diag: lambda must be positive");
  const S d1(p.d1), d2(p.d2), p2 = as_scalar<S>(p.p2);
  const S r1 = r1_offset<S>(p) / (S(4) * d1) + p2 / (S(4) * d1) * lambda * lambda;
  const S r2 = S(-1) / S(2) - p2 / (S(2) * d2) * lambda;
  return {r1, r2};
}

template <class S>
struct TSolution {
  S t1;
  S lambda;
};

// t1 on the image parabola over t2, and the metric ratio realizing it.
template <class S>
TSolution<S> solve_T(const TwoSummandParams& p, const S& t2) {
  validate(p);
  const S half = S(1) / S(2);
  if (!(t2 < -half)) throw NotInImage("solve_T: t2 must be below -1/2");
  const S d1(p.d1), d2(p.d2), p2 = as_scalar<S>(p.p2);
  const S a = d2 * d2 / (d1 * p2);
  const S t1 = a * t2 * t2 + a * t2 + (p2 * r1_offset<S>(p) + d2 * d2) / (S(4) * d1 * p2);
  const S lambda = S(-2) * d2 / p2 * (t2 + half);
  return {t1, lambda};
}

struct CTBranch {
  double c = 0.0;
  double lambda = 0.0;
};

struct CTAnalysis {
  double tau = 0.0;               // solvable iff t1/t2 <= tau
  double second_band_low = 0.0;   // second solution iff low < t1/t2 < tau
  std::optional<CTBranch> plus;
  std::optional<CTBranch> minus;
  int solution_count = 0;
  bool boundary = false;          // t1/t2 within the tolerance band of tau
  bool trivial_p1 = false;
  std::vector<std::string> diagnostics;
};

inline constexpr double kBoundaryBand = 1e-9;

double ct_threshold(const TwoSummandParams& p);

// Residual of the quadratic in c whose roots give ric = cT.
double ct_quadratic_residual(const TwoSummandParams& p, double t1, double t2, double c);

// Metric ratio for a given c: lambda = (-2 d2 / p2)(c t2 + 1/2).
double ct_lambda(const TwoSummandParams& p, double t2, double c);

// Requires t1 > 0 and t2 < 0 (std::invalid_argument otherwise).
CTAnalysis analyze_cT(const TwoSummandParams& p, double t1, double t2);

// The printed variant of the trivial-p1 metric ratio, -2 d1 (c t2 + 1/2),
// kept for comparison only.
double trivial_p1_printed_lambda(const TwoSummandParams& p, double t2, double c);

enum class ProductMode { RicEqualsT, RicEqualsCT };

struct ProductResult {
  bool solvable = false;
  std::optional<double> c;
  std::string note;
};

// Product of two irreducible noncompact symmetric spaces: the Ricci tensor is
// (-1/2, -1/2) in the fixed basis for every invariant metric.
ProductResult product_case_solve(ProductMode mode, const DiagTensor<double>& T, double tol = 1e-12);

}  // namespace prc
