#include "prc/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

namespace prc {

namespace {

const char* const kBoundNames[kBoundCount] = {
    "f275m1",    "f2213m1",   "f4507m1", "f4507m2", "f25m1", "f1168m1",
    "f1168m2",   "f166360m1", "f166360m2", "f150m1", "f150m2",
};

}  // namespace

const char* bound_name(Bound b) { return kBoundNames[static_cast<int>(b)]; }

BoundFamily bound_family(Bound b) {
  switch (b) {
    case Bound::F275m1: return BoundFamily::P275;
    case Bound::F2213m1: return BoundFamily::P2213;
    case Bound::F4507m1:
    case Bound::F4507m2: return BoundFamily::P4507;
    case Bound::F25m1: return BoundFamily::P25;
    case Bound::F1168m1:
    case Bound::F1168m2: return BoundFamily::P1168;
    case Bound::F166360m1:
    case Bound::F166360m2: return BoundFamily::P166360;
    case Bound::F150m1:
    case Bound::F150m2: return BoundFamily::P150;
  }
  throw std::logic_error("bound_family: unknown bound");
}

int bound_root_index(Bound b) {
  switch (b) {
    case Bound::F4507m2:
    case Bound::F1168m2:
    case Bound::F166360m2:
    case Bound::F150m2: return 2;
    default: return 1;
  }
}

QPoly bound_polynomial(BoundFamily f, const Rational& m) {
  const Rational m2 = m * m, m4 = m2 * m2, m6 = m4 * m2;
  using V = std::vector<Rational>;
  switch (f) {
    case BoundFamily::P275:
      return QPoly(V{-2 - 75 * m2, 6 - 180 * m2, 180 - 378 * m2, 756 - 324 * m2, 1134 - 243 * m2,
                     Rational(486)});
    case BoundFamily::P2213:
      return QPoly(V{-2160 * m6 + 5112 * m4 + 213 * m2 - 2, 5616 * m4 - 3780 * m2 + 6,
                     -648 * m4 - 1242 * m2 + 180, 972 * m2 + 756, 1134 - 243 * m2, Rational(486)});
    case BoundFamily::P4507:
      return QPoly(V{4 - 507 * m2, 51 - 1404 * m2, 252 - 1674 * m2, 594 - 972 * m2, 648 - 243 * m2,
                     Rational(243)});
    case BoundFamily::P25:
      return QPoly(V{-25 * m2, 1 + 60 * m2, 12 - 126 * m2, 54 + 108 * m2, 108 - 81 * m2, Rational(81)});
    case BoundFamily::P1168:
      return QPoly(V{1 - 168 * m2 + 144 * m4, 12 + 144 * m2, 54 + 216 * m2, Rational(108), Rational(81)});
    case BoundFamily::P166360:
      return QPoly(V{16 - 6360 * m2 + 47961 * m4, 216 + 8478 * m2 + 149796 * m4,
                     1161 + 54432 * m2 + 176094 * m4, 3132 + 64476 * m2 + 92340 * m4,
                     4374 + 29160 * m2 + 18225 * m4, 2916 + 4374 * m2, Rational(729)});
    case BoundFamily::P150:
      return QPoly(V{-150 * m2 + 75 * m4, 2 - 231 * m2 + 540 * m4, 42 + 4806 * m2 + 3402 * m4,
                     378 + 14742 * m2 + 8748 * m4, 1890 - 6966 * m2 + 19683 * m4, 5670 - 45927 * m2,
                     10206 - 13122 * m2, Rational(10206), Rational(4374)});
  }
  throw std::logic_error("bound_polynomial: unknown family");
}

double bound_value(Bound b, double m, double precision) {
  return root_at_index(bound_polynomial(bound_family(b), Rational(m)), bound_root_index(b), precision).value;
}

namespace {

// An l-bound: an indexed root or one of the explicit curves.
struct Curve {
  enum Kind { Root, Square, Quartic, Half } kind;  // m^2, (3m^2 - 4)/3, (m^2 - 2)/2
  Bound bound = Bound::F275m1;
};

constexpr Curve root(Bound b) { return {Curve::Root, b}; }
constexpr Curve kSquare{Curve::Square};
constexpr Curve kQ{Curve::Quartic};
constexpr Curve kH{Curve::Half};

std::string curve_name(const Curve& c) {
  switch (c.kind) {
    case Curve::Root: return bound_name(c.bound);
    case Curve::Square: return "m^2";
    case Curve::Quartic: return "(3m^2-4)/3";
    case Curve::Half: return "(m^2-2)/2";
  }
  return "?";
}

double explicit_value(const Curve& c, double m) {
  switch (c.kind) {
    case Curve::Square: return m * m;
    case Curve::Quartic: return (3.0 * m * m - 4.0) / 3.0;
    case Curve::Half: return (m * m - 2.0) / 2.0;
    default: break;
  }
  throw std::logic_error("explicit_value: root curve");
}

double curve_value(const Curve& c, double m) {
  return c.kind == Curve::Root ? bound_value(c.bound, m) : explicit_value(c, m);
}

const char* const kMarkNames[kMarkCount] = {
    "0",    "0.281", "0.372", "0.423", "0.556", "1/sqrt3", "0.625", "sqrt(2/3)", "0.875", "0.986", "3sqrt3/5",
    "1.09", "1.11",  "1.13",  "1.17",  "1.40",  "1.52a",   "1.52b", "1.56",      "2.22",  "inf",
};

double crossing(const Curve& a, const Curve& b, double lo, double hi) {
  auto g = [&](double m) { return curve_value(a, m) - curve_value(b, m); };
  double glo = g(lo);
  if (glo * g(hi) > 0.0) throw std::logic_error("crossover: no sign change between " + curve_name(a) + " and " + curve_name(b));
  while (hi - lo > 1e-14 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// The other curve touches f2213m1 from above; locate the minimum gap.
double tangency(const Curve& upper, double lo, double hi) {
  const Curve lower = root(Bound::F2213m1);
  auto g = [&](double m) { return curve_value(upper, m) - curve_value(lower, m); };
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int i = 0; i < 80 && hi - lo > 1e-12; ++i) {
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - r * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + r * (hi - lo);
      g2 = g(x2);
    }
  }
  return 0.5 * (lo + hi);
}

// Two adjacent real roots of the family meet; the real root count drops.
double merge(BoundFamily f, double lo, double hi) {
  auto count = [&](double m) { return count_real_roots(bound_polynomial(f, Rational(m))); };
  const int nlo = count(lo);
  if (count(hi) >= nlo) throw std::logic_error("crossover: root count does not drop");
  while (hi - lo > 1e-14 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (count(mid) >= nlo) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<Crossover> compute_crossovers() {
  std::vector<Crossover> out;
  auto add = [&](Mark k, double v, double printed, std::string how) {
    out.push_back({k, v, printed, std::move(how)});
  };
  add(Mark::Zero, 0.0, 0.0, "axis");
  add(Mark::X281, crossing(kSquare, root(Bound::F166360m2), 0.279, 0.283), 0.281, "crossing m^2 / f166360m2");
  add(Mark::X372, crossing(kSquare, root(Bound::F150m2), 0.370, 0.374), 0.372, "crossing m^2 / f150m2");
  add(Mark::X423, crossing(root(Bound::F275m1), root(Bound::F4507m1), 0.421, 0.425), 0.423,
      "crossing f275m1 / f4507m1");
  add(Mark::X556, tangency(root(Bound::F4507m1), 0.553, 0.559), 0.556, "tangency f2213m1 / f4507m1");
  add(Mark::InvSqrt3, 1.0 / std::sqrt(3.0), 0.0, "explicit");
  add(Mark::X625, merge(BoundFamily::P4507, 0.62, 0.63), 0.625, "merge f4507m1 / f4507m2");
  add(Mark::SqrtTwoThirds, std::sqrt(2.0 / 3.0), 0.0, "explicit");
  add(Mark::X875, tangency(root(Bound::F166360m1), 0.872, 0.878), 0.875, "tangency f2213m1 / f166360m1");
  add(Mark::X986, tangency(root(Bound::F1168m1), 0.983, 0.989), 0.986, "tangency f2213m1 / f1168m1");
  add(Mark::ThreeSqrt3By5, 3.0 * std::sqrt(3.0) / 5.0, 0.0, "explicit");
  add(Mark::X109, crossing(kQ, root(Bound::F150m1), 1.085, 1.095), 1.09, "crossing (3m^2-4)/3 / f150m1");
  add(Mark::X111, crossing(kQ, root(Bound::F1168m2), 1.11, 1.12), 1.11, "crossing (3m^2-4)/3 / f1168m2");
  add(Mark::X113, crossing(root(Bound::F1168m2), root(Bound::F150m1), 1.128, 1.133), 1.13,
      "crossing f1168m2 / f150m1");
  add(Mark::X117, crossing(kQ, root(Bound::F150m2), 1.17, 1.18), 1.17, "crossing (3m^2-4)/3 / f150m2");
  add(Mark::X140, crossing(kQ, root(Bound::F25m1), 1.40, 1.41), 1.40, "crossing (3m^2-4)/3 / f25m1");
  add(Mark::X152a, tangency(root(Bound::F150m1), 1.5165, 1.5195), 1.52, "tangency f2213m1 / f150m1");
  add(Mark::X152b, merge(BoundFamily::P150, 1.519, 1.521), 1.52, "merge f150m1 / f150m2");
  add(Mark::X156, crossing(kQ, root(Bound::F275m1), 1.56, 1.57), 1.56, "crossing (3m^2-4)/3 / f275m1");
  add(Mark::X222, tangency(root(Bound::F25m1), 2.212, 2.218), 2.22, "tangency f2213m1 / f25m1");
  add(Mark::Infinity, INFINITY, INFINITY, "unbounded");

  for (const auto& c : out) {
    if (!std::isfinite(c.value) || c.printed == 0.0) continue;
    // rounding agreement with the printed decimal
    const double unit = c.printed < 1.0 ? 1e-3 : 1e-2;
    if (std::abs(c.value - c.printed) > 0.5 * unit + 1e-12) {
      std::ostringstream os;
      os << "crossover " << mark_name(c.mark) << " computed as " << c.value << " does not round to " << c.printed;
      throw std::logic_error(os.str());
    }
  }
  return out;
}

}  // namespace

const char* mark_name(Mark k) { return kMarkNames[static_cast<int>(k)]; }

const std::vector<Crossover>& crossovers() {
  static const std::vector<Crossover> table = compute_crossovers();
  return table;
}

double mark_value(Mark k) {
  static const std::array<double, kMarkCount> values = [] {
    std::array<double, kMarkCount> v{};
    for (const auto& c : crossovers()) v[static_cast<int>(c.mark)] = c.value;
    return v;
  }();
  return values[static_cast<int>(k)];
}

namespace {

struct Piece {
  int region;
  Mark m_lo;
  bool m_lo_strict;
  Mark m_hi;
  bool m_hi_strict;
  Curve lo;
  bool lo_strict;
  Curve hi;
  bool hi_strict;
  bool equality = false;  // l = lo
};

using M = Mark;
using B = Bound;
constexpr bool kOpen = true, kClosed = false;

const std::vector<Piece>& pieces() {
  static const std::vector<Piece> table = {
      {1, M::Zero, kOpen, M::Infinity, kOpen, kH, kClosed, kSquare, kOpen},
      {2, M::Zero, kOpen, M::InvSqrt3, kOpen, root(B::F275m1), kClosed, kQ, kOpen},
      {3, M::Zero, kOpen, M::SqrtTwoThirds, kClosed, root(B::F2213m1), kClosed, kH, kClosed},
      {3, M::SqrtTwoThirds, kOpen, M::Infinity, kOpen, root(B::F2213m1), kClosed, kQ, kOpen},
      {4, M::Zero, kOpen, M::X625, kClosed, root(B::F4507m1), kClosed, root(B::F4507m1), kClosed, true},
      {4, M::InvSqrt3, kOpen, M::X625, kOpen, root(B::F4507m2), kClosed, root(B::F4507m2), kClosed, true},
      {5, M::InvSqrt3, kOpen, M::Infinity, kOpen, root(B::F275m1), kClosed, kSquare, kOpen},
      {6, M::InvSqrt3, kOpen, M::X986, kClosed, root(B::F1168m1), kOpen, kQ, kOpen},
      {6, M::InvSqrt3, kOpen, M::X111, kClosed, root(B::F1168m2), kOpen, root(B::F25m1), kOpen},
      {6, M::X111, kOpen, M::X140, kOpen, root(B::F2213m1), kClosed, root(B::F25m1), kOpen},
      {6, M::X222, kClosed, M::Infinity, kOpen, root(B::F25m1), kOpen, kQ, kOpen},
      {7, M::InvSqrt3, kOpen, M::X111, kClosed, root(B::F1168m2), kOpen, root(B::F275m1), kClosed},
      {7, M::X111, kOpen, M::X156, kClosed, root(B::F2213m1), kClosed, root(B::F275m1), kClosed},
      {8, M::InvSqrt3, kOpen, M::X222, kClosed, root(B::F25m1), kOpen, root(B::F275m1), kClosed},
      {8, M::X222, kOpen, M::Infinity, kOpen, root(B::F2213m1), kClosed, root(B::F275m1), kClosed},
      {9, M::X281, kOpen, M::InvSqrt3, kClosed, root(B::F166360m2), kOpen, kSquare, kOpen},
      {9, M::InvSqrt3, kOpen, M::SqrtTwoThirds, kClosed, root(B::F166360m1), kOpen, kQ, kOpen},
      {9, M::InvSqrt3, kOpen, M::SqrtTwoThirds, kClosed, root(B::F166360m2), kOpen, root(B::F25m1), kOpen},
      {9, M::SqrtTwoThirds, kOpen, M::X875, kClosed, root(B::F166360m1), kOpen, root(B::F25m1), kOpen},
      {10, M::Zero, kOpen, M::X372, kClosed, root(B::F4507m1), kOpen, kSquare, kOpen},
      {10, M::X372, kOpen, M::X556, kClosed, root(B::F4507m1), kOpen, root(B::F150m2), kOpen},
      {10, M::X556, kOpen, M::X152a, kOpen, root(B::F2213m1), kClosed, root(B::F150m2), kOpen},
      {10, M::X152a, kClosed, M::X152b, kOpen, root(B::F150m1), kOpen, root(B::F150m2), kOpen},
      {11, M::X372, kOpen, M::InvSqrt3, kClosed, root(B::F150m2), kOpen, kSquare, kOpen},
      {11, M::InvSqrt3, kOpen, M::X117, kClosed, root(B::F150m2), kOpen, root(B::F25m1), kOpen},
      {11, M::X117, kOpen, M::X140, kOpen, root(B::F150m1), kOpen, root(B::F25m1), kOpen},
      {11, M::X140, kClosed, M::X152b, kClosed, root(B::F150m1), kOpen, kQ, kOpen},
      {12, M::ThreeSqrt3By5, kOpen, M::X117, kClosed, root(B::F150m2), kOpen, root(B::F275m1), kClosed},
      {12, M::X117, kOpen, M::X152b, kClosed, root(B::F150m1), kOpen, root(B::F275m1), kClosed},
      {13, M::ThreeSqrt3By5, kOpen, M::X113, kClosed, root(B::F1168m2), kOpen, root(B::F150m2), kOpen},
      {13, M::X109, kOpen, M::X113, kClosed, root(B::F2213m1), kClosed, root(B::F150m1), kOpen},
      {14, M::Zero, kOpen, M::X423, kOpen, root(B::F2213m1), kClosed, root(B::F4507m1), kOpen},
      {14, M::X423, kClosed, M::X556, kOpen, root(B::F2213m1), kClosed, root(B::F275m1), kClosed},
      {14, M::X556, kClosed, M::InvSqrt3, kOpen, root(B::F4507m1), kOpen, root(B::F275m1), kClosed},
      {14, M::InvSqrt3, kClosed, M::X625, kOpen, root(B::F4507m1), kOpen, root(B::F4507m2), kOpen},
  };
  return table;
}

bool in_m_range(const Piece& p, double m) {
  const double lo = mark_value(p.m_lo), hi = mark_value(p.m_hi);
  const bool above = p.m_lo_strict ? m > lo : m >= lo;
  const bool below = p.m_hi_strict ? m < hi : m <= hi;
  return above && below;
}

// Bound values at one m, evaluated on demand.
class BoundCache {
public:
  explicit BoundCache(double m) : m_(m) {}

  std::optional<double> get(const Curve& c, std::string& error) {
    if (c.kind != Curve::Root) return explicit_value(c, m_);
    const int i = static_cast<int>(c.bound);
    if (!done_[i]) {
      done_[i] = true;
      try {
        values_[i] = bound_value(c.bound, m_);
      } catch (const RootIndexError& e) {
        errors_[i] = e.what();
      }
    }
    if (!values_[i]) error = errors_[i];
    return values_[i];
  }

private:
  double m_;
  std::array<bool, kBoundCount> done_{};
  std::array<std::optional<double>, kBoundCount> values_{};
  std::array<std::string, kBoundCount> errors_{};
};

bool near(double l, double b) { return std::abs(l - b) <= kRegionBand * std::max(1.0, std::abs(b)); }

}  // namespace

RegionVerdict region_contains(double l, double m) {
  if (!(m > 0.0) || !std::isfinite(m) || !std::isfinite(l))
    throw std::invalid_argument("region_contains: need finite l and m > 0");
  RegionVerdict out;
  BoundCache cache(m);
  for (const Piece& p : pieces()) {
    if (!in_m_range(p, m)) continue;
    std::string error;
    const auto lo = cache.get(p.lo, error);
    const auto hi = lo ? cache.get(p.hi, error) : std::nullopt;
    if (!lo || !hi) {
      std::ostringstream os;
      os << "R" << p.region << ": bound undefined at m = " << m << " (" << error << ")";
      out.diagnostics.push_back(os.str());
      continue;
    }
    bool satisfied;
    bool touching;
    if (p.equality) {
      satisfied = touching = near(l, *lo);
    } else {
      const bool above = p.lo_strict ? l > *lo : l >= *lo;
      const bool below = p.hi_strict ? l < *hi : l <= *hi;
      satisfied = above && below;
      const double band_lo = kRegionBand * std::max(1.0, std::abs(*lo));
      const double band_hi = kRegionBand * std::max(1.0, std::abs(*hi));
      touching = (near(l, *lo) || near(l, *hi)) && l >= *lo - band_lo && l <= *hi + band_hi;
    }
    if (touching) out.boundary = true;
    if (satisfied && (out.ids.empty() || out.ids.back() != p.region)) out.ids.push_back(p.region);
  }
  std::sort(out.ids.begin(), out.ids.end());
  out.ids.erase(std::unique(out.ids.begin(), out.ids.end()), out.ids.end());
  out.contained = !out.ids.empty();
  return out;
}

}  // namespace prc
