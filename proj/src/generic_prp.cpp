#include "prc/generic_prp.hpp"

#include <algorithm>
#include <cmath>

namespace prc {

void validate(const TwoSummandParams& p) {
  if (p.d1 <= 0 || p.d2 <= 0) throw std::invalid_argument("params: dimensions must be positive");
  if (p.p1 < 0) throw std::invalid_argument("params: p1 must be nonnegative");
  if (p.p2 <= 0) throw std::invalid_argument("params: p2 must be positive");
  if (p.p1 + p.p2 > p.d1) throw std::invalid_argument("params: p1 + p2 exceeds d1");
  if (2 * p.p2 > p.d2) throw std::invalid_argument("params: 2 p2 exceeds d2");
}

bool is_trivial_p1(const TwoSummandParams& p) { return p.p1 == 0 && p.p2 == 1 && p.d1 == 1; }

TwoSummandParams so17_params() { return {7, 7, Rational(7, 6), Rational(7, 6)}; }

namespace {

struct Coeffs {
  double a;  // d2^2 / (d1 p2)
  double k;  // (2 d1 - p1 - 2 p2) / (4 d1)
};

Coeffs coeffs(const TwoSummandParams& p) {
  const double d1 = p.d1, d2 = p.d2, p2 = static_cast<double>(p.p2);
  return {d2 * d2 / (d1 * p2), r1_offset<double>(p) / (4.0 * d1)};
}

}  // namespace

double ct_threshold(const TwoSummandParams& p) {
  validate(p);
  const double d1 = p.d1, d2 = p.d2, p2 = static_cast<double>(p.p2);
  return d2 * d2 / (d1 * p2) - d2 / d1 * std::sqrt(d2 * d2 / (p2 * p2) + r1_offset<double>(p) / p2);
}

double ct_quadratic_residual(const TwoSummandParams& p, double t1, double t2, double c) {
  const Coeffs k = coeffs(p);
  return k.a * t2 * t2 * c * c + (k.a * t2 - t1) * c + k.a / 4.0 + k.k;
}

double ct_lambda(const TwoSummandParams& p, double t2, double c) {
  return -2.0 * p.d2 / static_cast<double>(p.p2) * (c * t2 + 0.5);
}

double trivial_p1_printed_lambda(const TwoSummandParams& p, double t2, double c) {
  return -2.0 * p.d1 * (c * t2 + 0.5);
}

CTAnalysis analyze_cT(const TwoSummandParams& p, double t1, double t2) {
  validate(p);
  if (!(t1 > 0.0) || !(t2 < 0.0))
    throw std::invalid_argument("analyze_cT: requires t1 > 0 and t2 < 0");

  CTAnalysis out;
  const Coeffs k = coeffs(p);
  out.tau = ct_threshold(p);
  out.second_band_low = -2.0 * k.k;
  out.trivial_p1 = is_trivial_p1(p);

  const double qa = k.a * t2 * t2;
  const double qb = k.a * t2 - t1;
  const double disc = qb * qb - 4.0 * qa * (k.a / 4.0 + k.k);
  auto branch = [&](double c) { return CTBranch{c, ct_lambda(p, t2, c)}; };

  if (out.trivial_p1) {
    const double d2 = p.d2;
    const double c = (-(d2 * d2 * t2 - t1) + std::sqrt(t1 * t1 - 2.0 * d2 * d2 * t1 * t2)) /
                     (2.0 * d2 * d2 * t2 * t2);
    out.plus = branch(c);
    out.solution_count = 1;
    const double printed = trivial_p1_printed_lambda(p, t2, c);
    if (std::abs(printed - out.plus->lambda) > 1e-12 * std::max(1.0, std::abs(out.plus->lambda)))
      out.diagnostics.push_back("trivial p1: printed ratio -2 d1 (c t2 + 1/2) = " + std::to_string(printed) +
                                " differs from -2 d2/p2 (c t2 + 1/2) = " + std::to_string(out.plus->lambda));
    return out;
  }

  const double rho = t1 / t2;
  const double band = kBoundaryBand * std::max(1.0, std::abs(out.tau));
  if (std::abs(rho - out.tau) <= band) {
    out.boundary = true;
    const double c = -qb / (2.0 * qa);
    out.plus = branch(c);
    out.minus = branch(c);
    out.solution_count = 1;
    return out;
  }
  if (rho > out.tau) return out;

  const double root = std::sqrt(std::max(0.0, disc));
  out.plus = branch((-qb + root) / (2.0 * qa));
  out.solution_count = 1;
  if (rho > out.second_band_low) {
    out.minus = branch((-qb - root) / (2.0 * qa));
    out.solution_count = 2;
  }
  return out;
}

ProductResult product_case_solve(ProductMode mode, const DiagTensor<double>& T, double tol) {
  ProductResult out;
  if (mode == ProductMode::RicEqualsT) {
    out.solvable = std::abs(T.t1 + 0.5) <= tol && std::abs(T.t2 + 0.5) <= tol;
    out.note = out.solvable ? "every invariant metric solves ric = T" : "no solution: T is not (-1/2, -1/2)";
    return out;
  }
  const bool multiple = T.t1 < 0.0 && std::abs(T.t1 - T.t2) <= tol * std::max(1.0, std::abs(T.t1));
  if (!multiple) {
    out.note = "no solution: T is not a negative multiple of (-1/2, -1/2)";
    return out;
  }
  out.solvable = true;
  out.c = -0.5 / T.t1;
  out.note = "every invariant metric solves ric = cT";
  return out;
}

}  // namespace prc
