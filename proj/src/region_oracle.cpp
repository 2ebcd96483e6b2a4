#include "prc/region_oracle.hpp"

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <cmath>

namespace prc {

const char* verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Member: return "member";
    case OracleVerdict::NonMember: return "non-member";
    case OracleVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// x = e^u cosh w, y = e^-u cosh w, z = sinh w keeps xy - z^2 = 1.
PhiParams<double> unpack(double u, double w) {
  const double ch = std::cosh(w);
  return {std::exp(u) * ch, std::exp(-u) * ch, std::sinh(w)};
}

struct RatioResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  double l, m;

  int inputs() const { return 2; }
  int values() const { return 2; }

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& f) const {
    f.resize(2);
    if (!(std::abs(p[0]) < 40.0) || !(std::abs(p[1]) < 12.0)) {
      f.setConstant(1e3);
      return 0;
    }
    RicTriple<double> r;
    try {
      r = ric_xyz(unpack(p[0], p[1]));
    } catch (const std::invalid_argument&) {  // xy - z^2 lost to rounding
      f.setConstant(1e3);
      return 0;
    }
    f[0] = r.r2 / r.r1 - l;
    f[1] = std::abs(r.r3) / r.r1 - m;
    if (!f.allFinite()) f.setConstant(1e3);
    return 0;
  }
};

}  // namespace

RegionOracleResult region_oracle(double l, double m, const RegionOracleOptions& opt) {
  if (!(m >= 0.0) || !std::isfinite(l) || !std::isfinite(m))
    throw std::invalid_argument("region_oracle: need finite l and m >= 0");
  RegionOracleResult out;
  out.residual = INFINITY;

  static const double kU[] = {0.0, -0.5, 0.5, -1.0, 1.0, -2.0, 2.0, -3.0, 3.0, -4.5, 4.5, -6.0, 6.0};
  static const double kW[] = {0.0, 0.1, 0.3, 0.6, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.5, 8.0, 10.0};

  RatioResidual fn{l, m};
  Eigen::NumericalDiff<RatioResidual> diff(fn);
  int index = 0;
  for (double w0 : kW) {
    for (double u0 : kU) {
      Eigen::VectorXd p(2);
      p << u0, w0;
      Eigen::LevenbergMarquardt<Eigen::NumericalDiff<RatioResidual>> lm(diff);
      lm.parameters.ftol = 1e-15;
      lm.parameters.xtol = 1e-15;
      lm.parameters.maxfev = 400;
      lm.minimize(p);
      Eigen::VectorXd f(2);
      fn(p, f);
      const double res = f.norm();
      if (res < out.residual) {
        out.residual = res;
        out.best_start = index;
        out.preimage = unpack(p[0], std::abs(p[1]));
      }
      ++index;
      if (out.residual < opt.tol) break;
    }
    if (out.residual < opt.tol) break;
  }
  out.starts = index;
  if (out.residual < opt.tol) out.verdict = OracleVerdict::Member;
  else if (out.residual > opt.floor) out.verdict = OracleVerdict::NonMember;
  return out;
}

}  // namespace prc
