#pragma once

// SO(1,7)/G2: Ricci values as rational functions of the equivariant map,
// the cubic relating t1 to (t2, t3) on the image, and the ric = T and
// ric = cT solvers.

#include "prc/lie_core.hpp"
#include "prc/polyroots.hpp"
#include "prc/region.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace prc {

// phi = [[a, c], [c, b]] acting blockwise on p1 + p2.
template <class S>
struct PhiSqrtParams {
  S a, b, c;
};

// Phi = phi^2 = [[x, z], [z, y]].
template <class S>
struct PhiParams {
  S x, y, z;
};

template <class S>
struct TensorTriple {
  S t1, t2, t3;
};

namespace detail {

template <class S>
void require_nonsingular(const S& det, const char* who) {
  if constexpr (ScalarOps<S>::exact) {
    if (det == S(0)) throw std::invalid_argument(std::string(who) + ": ab - c^2 must be nonzero");
  } else {
    if (!(std::abs(det) > 0.0) || !std::isfinite(det))
      throw std::invalid_argument(std::string(who) + ": ab - c^2 must be nonzero");
  }
}

}  // namespace detail

template <class S>
RicTriple<S> ric_abc(const PhiSqrtParams<S>& p) {
  const S &a = p.a, &b = p.b, &c = p.c;
  detail::require_nonsingular<S>(a * b - c * c, "ric_abc");
  const S a2 = a * a, b2 = b * b, c2 = c * c;
  const S a3 = a2 * a, a4 = a2 * a2, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4;
  const S c4 = c2 * c2, c6 = c4 * c2, c8 = c4 * c4;
  const S e = c2 - a * b;
  const S e2 = e * e, e4 = e2 * e2;
  const S den = S(24) * e4;

  const S n1 = S(9) * a4 * (b4 + c4) - S(36) * a3 * b * c2 * (b2 - c2) +
               S(6) * a2 * c2 * (b4 + S(20) * b2 * c2 + c4) +
               S(12) * a * b * c2 * (b4 + S(5) * b2 * c2 - S(2) * c4) + b8 + S(10) * b6 * c2 +
               S(27) * b4 * c4 + S(10) * b2 * c6 + S(10) * c8;

  const S ac = a2 + c2, bc = b2 + c2, ab = a + b;
  const S u = S(2) * a2 * b + a * bc + b2 * b + S(3) * b * c2;
  const S w = a3 * b + S(2) * a2 * c2 + S(3) * a * b * c2 + b2 * c2 + c4;
  const S v = S(3) * a + b;
  const S n2 = S(-2) * (ac * ac + S(2) * c2 * ab * ab + bc * bc) * e2 + c2 * u * u +
               c2 * v * v * ac * ac + S(2) * w * w - S(12) * e4;

  const S g = S(3) * a2 + b2 + S(4) * c2;
  const S n3 = -(c * ab * bc * g * g);
  return {n1 / den, n2 / den, n3 / den};
}

template <class S>
void check_phi_params(const PhiParams<S>& p) {
  if (!(p.x > S(0)) || !(p.y > S(0)) || !(p.x * p.y - p.z * p.z > S(0)))
    throw std::invalid_argument("PhiParams: need x > 0, y > 0, xy - z^2 > 0");
}

template <class S>
RicTriple<S> ric_xyz(const PhiParams<S>& p) {
  check_phi_params(p);
  const S &x = p.x, &y = p.y, &z = p.z;
  const S x2 = x * x, y2 = y * y, z2 = z * z;
  const S e = z2 - x * y;
  const S den = S(24) * e * e;
  const S r1 = S(9) * x2 * y2 - S(18) * x * y * z2 + y2 * y2 + S(6) * y2 * z2 + S(18) * z2 * z2;
  const S r2 = S(-3) * x2 * (S(4) * y2 - S(3) * z2) - S(2) * x * (y2 * y - S(12) * y * z2) +
               S(3) * y2 * z2 - S(6) * z2 * z2;
  const S k = S(3) * x + y;
  const S r3 = -(y * z * k * k);
  return {r1 / den, r2 / den, r3 / den};
}

template <class S>
PhiParams<S> phi_square(const PhiSqrtParams<S>& p) {
  detail::require_nonsingular<S>(p.a * p.b - p.c * p.c, "phi_square");
  return {p.a * p.a + p.c * p.c, p.b * p.b + p.c * p.c, p.c * (p.a + p.b)};
}

// Positive-definite square root of [[x, z], [z, y]].
PhiSqrtParams<double> phi_sqrt(const PhiParams<double>& p);

// Brute-force Ricci values for Phi, through phi_sqrt and ric_oracle.
OracleResult<double> ric_oracle_xyz(const PhiParams<double>& p, double tol = kZeroTol);

// The cubic in t1 whose first root is t1 on the image, for given (t2, t3).
QPoly image_cubic(const Rational& t2, const Rational& t3);

template <class S>
S image_cubic_value(const S& t1, const S& t2, const S& t3) {
  const S t22 = t2 * t2, t32 = t3 * t3;
  return S(128) * t1 * t1 * t1 + t1 * t1 * (S(-768) * t22 - S(768) * t2 - S(432)) +
         t1 * (S(1152) * t22 + S(1536) * t2 * t32 + S(1152) * t2 + S(1536) * t32 + S(432)) -
         S(432) * t22 - S(432) * t2 - S(768) * t32 * t32 - S(288) * t32 - S(135);
}

// Largest monomial of the cubic at (t1, t2, t3), for relative residuals.
double image_cubic_scale(double t1, double t2, double t3);

IndexedRoot f1_root(const Rational& t2, const Rational& t3, double precision = kDefaultRootPrecision);
double f1(double t2, double t3, double precision = kDefaultRootPrecision);

inline constexpr double kMembershipTol = 1e-9;

// |t3| on the curve where the image has t1 = 3/4 (defined for t2 >= -3/4).
double exceptional_t3(double t2);

// Lower bound on |t3| for t2 > -1/2.
double upper_branch_t3_floor(double t2);

enum class TBranch {
  None,
  Diagonal,     // t3 = 0, t1 = 6 t2^2 + 6 t2 + 15/8, t2 < -1/2
  Low,          // t2 <= -3/4, t1 = f1
  Middle,       // -3/4 < t2 <= -1/2 off the exceptional curve, t1 = f1
  Upper,        // t2 > -1/2 above the floor and off the exceptional curve, t1 = f1
  Exceptional,  // t2 > -3/4 on the exceptional curve, t1 = 3/4
};

const char* branch_name(TBranch b);

struct TVerdict {
  bool member = false;
  TBranch branch = TBranch::None;  // the clause the (t2, t3) pair falls in, member or not
  double expected_t1 = std::nan("");
  double residual = std::nan("");  // |t1 - expected_t1|
  std::vector<std::string> diagnostics;
};

TVerdict solve_T_so17(const TensorTriple<double>& T, double tol = kMembershipTol);

// Polynomial in c0 obtained from the cubic at (c0, c0 l, c0 m).
QPoly ct_quartic(const Rational& l, const Rational& m);

// t2/t1 range for t3 = 0: [(-sqrt5 - 2)/3, 0).
double diagonal_ct_lower_bound();

struct CTSo17Result {
  std::vector<double> c;  // ascending, positive
  bool diagonal = false;  // t3 = 0 case
  double l = 0.0, m = 0.0;
  RegionVerdict region;   // only filled when t3 != 0
  std::vector<std::string> diagnostics;
};

CTSo17Result solve_cT_so17(const TensorTriple<double>& T, double tol = kMembershipTol);

}  // namespace prc
