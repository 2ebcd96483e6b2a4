#pragma once

// The set R of normalized tensors (1, l, m) = (1, t2/t1, |t3|/t1) reachable
// by ric = cT on SO(1,7)/G2, as a union of 14 pieces whose l-bounds are
// indexed real roots of fixed polynomials in l with coefficients in m.

#include "prc/polyroots.hpp"

#include <array>
#include <string>
#include <vector>

namespace prc {

enum class BoundFamily { P275, P2213, P4507, P25, P1168, P166360, P150 };

enum class Bound {
  F275m1,
  F2213m1,
  F4507m1,
  F4507m2,
  F25m1,
  F1168m1,
  F1168m2,
  F166360m1,
  F166360m2,
  F150m1,
  F150m2,
};

inline constexpr int kBoundCount = 11;

const char* bound_name(Bound b);
BoundFamily bound_family(Bound b);
int bound_root_index(Bound b);

// The polynomial in l at the given m.
QPoly bound_polynomial(BoundFamily f, const Rational& m);

// Throws RootIndexError when the polynomial has too few real roots at m.
double bound_value(Bound b, double m, double precision = 1e-14);

// Abscissas in m where the clause structure changes. Computed once, on first use.
enum class Mark {
  Zero,
  X281,
  X372,
  X423,
  X556,
  InvSqrt3,      // 1/sqrt3
  X625,
  SqrtTwoThirds, // sqrt(2/3)
  X875,
  X986,
  ThreeSqrt3By5, // 3 sqrt3 / 5
  X109,
  X111,
  X113,
  X117,
  X140,
  X152a,
  X152b,
  X156,
  X222,
  Infinity,
};

inline constexpr int kMarkCount = 21;

struct Crossover {
  Mark mark;
  double value;
  double printed;  // the 2 or 3 digit decimal the value rounds to
  std::string how; // "crossing", "tangency" or "merge" with the curves involved
};

// Computed crossovers, in increasing m.
const std::vector<Crossover>& crossovers();
double mark_value(Mark k);
const char* mark_name(Mark k);

inline constexpr double kRegionBand = 1e-9;

struct RegionVerdict {
  bool contained = false;
  bool boundary = false;  // l within kRegionBand of an active bound
  std::vector<int> ids;   // satisfied regions, ascending, 1..14
  std::vector<std::string> diagnostics;
};

// Requires m > 0.
RegionVerdict region_contains(double l, double m);

}  // namespace prc
