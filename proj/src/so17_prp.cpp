#include "prc/so17_prp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace prc {

PhiSqrtParams<double> phi_sqrt(const PhiParams<double>& p) {
  check_phi_params(p);
  const double s = std::sqrt(p.x * p.y - p.z * p.z);
  const double t = std::sqrt(p.x + p.y + 2.0 * s);
  return {(p.x + s) / t, (p.y + s) / t, p.z / t};
}

OracleResult<double> ric_oracle_xyz(const PhiParams<double>& p, double tol) {
  const PhiSqrtParams<double> q = phi_sqrt(p);
  return ric_oracle<double>(q.a, q.b, q.c, MetricConvention::InverseRoot, tol);
}

QPoly image_cubic(const Rational& t2, const Rational& t3) {
  const Rational t22 = t2 * t2, t32 = t3 * t3;
  return QPoly(std::vector<Rational>{
      -432 * t22 - 432 * t2 - 768 * t32 * t32 - 288 * t32 - 135,
      1152 * t22 + 1536 * t2 * t32 + 1152 * t2 + 1536 * t32 + 432,
      -768 * t22 - 768 * t2 - 432,
      Rational(128),
  });
}

double image_cubic_scale(double t1, double t2, double t3) {
  const double a1 = std::abs(t1), a2 = std::abs(t2), s = t3 * t3;
  return std::max({128 * a1 * a1 * a1, 768 * a1 * a1 * a2 * a2, 768 * a1 * a1 * a2, 432 * a1 * a1,
                   1152 * a1 * a2 * a2, 1536 * a1 * a2 * s, 1152 * a1 * a2, 1536 * a1 * s, 432 * a1,
                   432 * a2 * a2, 432 * a2, 768 * s * s, 288 * s, 135.0});
}

IndexedRoot f1_root(const Rational& t2, const Rational& t3, double precision) {
  return root_at_index(image_cubic(t2, t3), 1, precision);
}

double f1(double t2, double t3, double precision) {
  return f1_root(Rational(t2), Rational(t3), precision).value;
}

double exceptional_t3(double t2) { return 0.5 * std::sqrt(1.5) * std::sqrt(4.0 * t2 + 3.0); }

double upper_branch_t3_floor(double t2) { return std::sqrt(3.0) / 4.0 * std::sqrt(2.0 * t2 + 1.0); }

const char* branch_name(TBranch b) {
  switch (b) {
    case TBranch::None: return "none";
    case TBranch::Diagonal: return "diagonal";
    case TBranch::Low: return "low";
    case TBranch::Middle: return "middle";
    case TBranch::Upper: return "upper";
    case TBranch::Exceptional: return "exceptional";
  }
  return "?";
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TVerdict solve_T_so17(const TensorTriple<double>& T, double tol) {
  TVerdict out;
  const double t1 = T.t1, t2 = T.t2, a3 = std::abs(T.t3);
  if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(T.t3))
    throw std::invalid_argument("solve_T_so17: non-finite tensor");

  if (a3 == 0.0) {
    if (t2 < -0.5) {
      out.branch = TBranch::Diagonal;
      out.expected_t1 = 6.0 * t2 * t2 + 6.0 * t2 + 15.0 / 8.0;
    }
  } else if (t2 <= -0.75) {
    out.branch = TBranch::Low;
  } else if (close(a3, exceptional_t3(t2), tol)) {
    out.branch = TBranch::Exceptional;
    out.expected_t1 = 0.75;
  } else if (t2 <= -0.5) {
    out.branch = TBranch::Middle;
  } else if (a3 > upper_branch_t3_floor(t2)) {
    out.branch = TBranch::Upper;
  }

  if (out.branch == TBranch::Low || out.branch == TBranch::Middle || out.branch == TBranch::Upper)
    out.expected_t1 = f1(t2, a3);
  if (out.branch == TBranch::None) {
    out.diagnostics.push_back("(t2, t3) outside every branch of the image");
    return out;
  }
  out.residual = std::abs(t1 - out.expected_t1);
  out.member = close(t1, out.expected_t1, tol);
  return out;
}

QPoly ct_quartic(const Rational& l, const Rational& m) {
  const Rational m2 = m * m, d = l - m2;
  return QPoly(std::vector<Rational>{
      Rational(-135),
      432 - 432 * l,
      -432 + 1152 * l - 432 * l * l - 288 * m2,
      128 - 768 * l + 1152 * l * l + 1536 * m2,
      -768 * d * d,
  });
}

double diagonal_ct_lower_bound() { return (-std::sqrt(5.0) - 2.0) / 3.0; }

namespace {

void push_unique(std::vector<double>& v, double c) {
  for (double x : v)
    if (std::abs(x - c) <= 1e-10 * std::max(1.0, std::abs(c))) return;
  v.push_back(c);
}

}  // namespace

CTSo17Result solve_cT_so17(const TensorTriple<double>& T, double tol) {
  if (!(T.t1 > 0.0)) throw std::invalid_argument("solve_cT_so17: requires t1 > 0");
  if (!std::isfinite(T.t1) || !std::isfinite(T.t2) || !std::isfinite(T.t3))
    throw std::invalid_argument("solve_cT_so17: non-finite tensor");
  CTSo17Result out;
  out.l = T.t2 / T.t1;
  out.m = std::abs(T.t3) / T.t1;
  const double l = out.l, m = out.m;
  std::vector<double> c0s;

  if (T.t3 == 0.0) {
    out.diagonal = true;
    const double low = diagonal_ct_lower_bound();
    if (l < low - tol || !(l < 0.0)) return out;
    // 6 l^2 c0^2 + (6 l - 1) c0 + 15/8 = 0
    const double qa = 6.0 * l * l, qb = 6.0 * l - 1.0, qc = 15.0 / 8.0;
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    for (double c0 : {(-qb - std::sqrt(disc)) / (2.0 * qa), (-qb + std::sqrt(disc)) / (2.0 * qa)}) {
      if (!(c0 > 0.0) || !(c0 * l < -0.5)) continue;
      if (solve_T_so17({c0, c0 * l, 0.0}, tol).member) push_unique(c0s, c0);
    }
  } else {
    out.region = region_contains(l, m);
    for (const auto& r : real_roots(ct_quartic(Rational(l), Rational(m)), 1e-14)) {
      const double c0 = r.value;
      if (!(c0 > 0.0)) continue;
      const double first = f1(c0 * l, c0 * m);
      if (!close(c0, first, tol)) continue;
      if (solve_T_so17({c0, c0 * l, c0 * m}, tol).member) push_unique(c0s, c0);
    }
    const double c0 = 0.75;
    if (c0 * l > -0.75 && close(c0 * m, exceptional_t3(c0 * l), tol)) push_unique(c0s, c0);

    if (out.region.contained != !c0s.empty() && !out.region.boundary) {
      std::ostringstream os;
      os << "region verdict (" << (out.region.contained ? "in R" : "not in R") << ") disagrees with "
         << c0s.size() << " c value(s) at (l, m) = (" << l << ", " << m << ")";
      out.diagnostics.push_back(os.str());
    }
  }
  for (double c0 : c0s) out.c.push_back(c0 / T.t1);
  std::sort(out.c.begin(), out.c.end());
  return out;
}

}  // namespace prc
