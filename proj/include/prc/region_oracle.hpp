#pragma once

// Numeric preimage search for a normalized tensor (1, l, m): look for a
// metric (x, y, z) with xy - z^2 = 1 whose Ricci ratios (r2/r1, |r3|/r1)
// hit (l, m), by Levenberg-Marquardt from a fixed grid of starts.

#include "prc/so17_prp.hpp"

namespace prc {

enum class OracleVerdict { Member, NonMember, Inconclusive };

const char* verdict_name(OracleVerdict v);

struct RegionOracleOptions {
  double tol = 1e-7;    // member when the residual norm is below this
  double floor = 1e-5;  // non-member when every start ends above this
};

struct RegionOracleResult {
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  double residual = 0.0;        // smallest residual norm over the starts
  PhiParams<double> preimage{}; // at the best start
  int starts = 0;
  int best_start = -1;
};

RegionOracleResult region_oracle(double l, double m, const RegionOracleOptions& opt = {});

}  // namespace prc
