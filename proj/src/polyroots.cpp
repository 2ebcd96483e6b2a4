#include "prc/polyroots.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>

namespace prc {

namespace {

using Int = BigInt;
using ZPoly = std::vector<Int>;  // ascending, no trailing zeros

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// Divide by the positive gcd of the coefficients.
void make_primitive(ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& c : p) c /= g;
}

ZPoly to_z(const QPoly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, denominator(c));
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) z.push_back(numerator(c) * (l / denominator(c)));
  make_primitive(z);
  return z;
}

QPoly to_q(const ZPoly& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return QPoly(std::move(c));
}

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

// Pseudo-remainder with the number of reduction steps, whose parity fixes
// the sign of the lc(b) power it carries.
ZPoly prem_counted(ZPoly a, const ZPoly& b, int& steps) {
  const int db = deg(b);
  const Int& lb = b.back();
  steps = 0;
  while (!a.empty() && deg(a) >= db) {
    const Int la = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    ++steps;
  }
  return a;
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
  int steps = 0;
  return prem_counted(a, b, steps);
}

// -rem(a, b) up to a positive factor, made primitive.
ZPoly sturm_next(const ZPoly& a, const ZPoly& b) {
  int steps = 0;
  ZPoly r = prem_counted(a, b, steps);
  const bool negative_scale = b.back() < 0 && steps % 2 == 1;
  if (!negative_scale)
    for (auto& c : r) c = -c;
  make_primitive(r);
  return r;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

struct Point {
  Int num, den;  // den > 0
};

Point to_point(const Rational& x) { return {numerator(x), denominator(x)}; }

int sign_of(const Int& v) { return v.sign(); }

// sign of p(num/den)
int zsign(const ZPoly& p, const Point& x) {
  if (p.empty()) return 0;
  Int v = p.back();
  Int dp = 1;
  for (int i = deg(p) - 1; i >= 0; --i) {
    dp *= x.den;
    v = v * x.num + p[i] * dp;
  }
  return sign_of(v);
}

int variations(const std::vector<ZPoly>& chain, const Point& x) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    const int s = zsign(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::vector<ZPoly> zsturm(const ZPoly& p) {
  std::vector<ZPoly> chain{p};
  ZPoly d = derivative(p);
  make_primitive(d);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (true) {
    ZPoly r = sturm_next(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

// p / g over Q, both primitive integer polynomials with g | p.
ZPoly exact_divide(const ZPoly& p, const ZPoly& g) {
  std::vector<Rational> rem(p.begin(), p.end());
  const int dg = deg(g);
  std::vector<Rational> q(std::max(0, deg(p) - dg + 1));
  for (int i = deg(p) - dg; i >= 0; --i) {
    const Rational f = rem[i + dg] / Rational(g.back());
    q[i] = f;
    for (int j = 0; j <= dg; ++j) rem[i + j] -= f * Rational(g[j]);
  }
  return to_z(QPoly(std::move(q)));
}

// Power of two strictly above every root's absolute value.
Rational cauchy_bound(const ZPoly& p) {
  Rational m = 0;
  const Rational lead = abs(Rational(p.back()));
  for (int i = 0; i < deg(p); ++i) m = std::max(m, abs(Rational(p[i])) / lead);
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

struct Analysis {
  ZPoly poly;                // primitive input
  ZPoly sqf;                 // square-free part
  std::vector<ZPoly> chain;  // Sturm sequence of sqf
  std::vector<ZPoly> gcds;   // square-free parts of the repeated gcd chain
  Rational bound;
  int total = 0;
};

Analysis analyze(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  Analysis a;
  a.poly = to_z(p);
  if (deg(a.poly) == 0) return a;
  a.chain = zsturm(a.poly);
  const ZPoly& last = a.chain.back();
  if (deg(last) == 0) {
    a.sqf = a.poly;
  } else {
    ZPoly g = last;
    make_primitive(g);
    a.sqf = exact_divide(a.poly, g);
    a.chain = zsturm(a.sqf);
    while (deg(g) > 0) {
      const ZPoly next = zgcd(g, derivative(g));
      a.gcds.push_back(exact_divide(g, next));
      g = next;
    }
  }
  a.bound = cauchy_bound(a.poly);
  a.total = variations(a.chain, to_point(-a.bound)) - variations(a.chain, to_point(a.bound));
  return a;
}

// Split point inside (lo, hi) avoiding roots of the square-free part.
Rational split_point(const Analysis& a, const Rational& lo, const Rational& hi) {
  static const int kNum[] = {16, 17, 15, 18, 14, 19, 13};
  for (int n : kNum) {
    Rational m = lo + (hi - lo) * Rational(n, 32);
    if (zsign(a.sqf, to_point(m)) != 0) return m;
  }
  // more roots than probes can only happen for huge degrees
  Rational m = lo + (hi - lo) * Rational(1, 3);
  while (zsign(a.sqf, to_point(m)) == 0) m = (m + lo) / 2;
  return m;
}

int count_in(const Analysis& a, const Rational& lo, const Rational& hi) {
  return variations(a.chain, to_point(lo)) - variations(a.chain, to_point(hi));
}

IndexedRoot refine(const Analysis& a, Rational lo, Rational hi, int index, const Rational& precision) {
  int slo = zsign(a.sqf, to_point(lo));
  while (hi - lo > precision) {
    const Rational m = (lo + hi) / 2;
    const int s = zsign(a.sqf, to_point(m));
    if (s == 0) {
      lo = hi = m;
      break;
    }
    if (s == slo) lo = m;
    else hi = m;
  }
  IndexedRoot r;
  r.index = index;
  r.lo = lo;
  r.hi = hi;
  r.value = static_cast<double>((lo + hi) / 2);
  r.width = static_cast<double>(hi - lo);
  for (const auto& g : a.gcds) {
    const bool has = lo == hi ? zsign(g, to_point(lo)) == 0
                              : zsign(g, to_point(lo)) * zsign(g, to_point(hi)) <= 0;
    if (!has) break;
    ++r.multiplicity;
  }
  return r;
}

void isolate(const Analysis& a, const Rational& lo, const Rational& hi, int count,
             std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational m = split_point(a, lo, hi);
  const int left = count_in(a, lo, m);
  isolate(a, lo, m, left, out);
  isolate(a, m, hi, count - left, out);
}

Rational to_rational_precision(double precision) {
  if (!(precision > 0.0)) throw std::invalid_argument("real_roots: precision must be positive");
  return Rational(precision);
}

}  // namespace

QPoly to_rational(const DPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs()) {
    if (!std::isfinite(v)) throw std::invalid_argument("polynomial coefficient is not finite");
    c.emplace_back(v);
  }
  return QPoly(std::move(c));
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return to_q(zgcd(to_z(a), to_z(b)));
}

QPoly square_free_part(const QPoly& p) {
  if (p.degree() <= 0) return p;
  const ZPoly z = to_z(p);
  const ZPoly g = zgcd(z, derivative(z));
  return to_q(exact_divide(z, g));
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.is_zero()) return out;
  for (const auto& z : zsturm(to_z(p))) out.push_back(to_q(z));
  return out;
}

int sign_at(const QPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  return zsign(to_z(p), to_point(x));
}

int count_real_roots(const QPoly& p) { return analyze(p).total; }
int count_real_roots(const DPoly& p) { return count_real_roots(to_rational(p)); }

std::vector<IndexedRoot> real_roots(const QPoly& p, double precision) {
  const Rational prec = to_rational_precision(precision);
  const Analysis a = analyze(p);
  std::vector<std::pair<Rational, Rational>> intervals;
  if (a.total > 0) isolate(a, -a.bound, a.bound, a.total, intervals);
  std::vector<IndexedRoot> out;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    out.push_back(refine(a, intervals[i].first, intervals[i].second, static_cast<int>(i) + 1, prec));
  return out;
}

std::vector<IndexedRoot> real_roots(const DPoly& p, double precision) {
  return real_roots(to_rational(p), precision);
}

IndexedRoot root_at_index(const QPoly& p, int n, double precision) {
  const Rational prec = to_rational_precision(precision);
  const Analysis a = analyze(p);
  if (n < 1 || n > a.total) throw RootIndexError(n, a.total);
  Rational lo = -a.bound, hi = a.bound;
  int k = n, count = a.total;
  while (count > 1) {
    const Rational m = split_point(a, lo, hi);
    const int left = count_in(a, lo, m);
    if (k <= left) {
      hi = m;
      count = left;
    } else {
      lo = m;
      k -= left;
      count -= left;
    }
  }
  return refine(a, lo, hi, n, prec);
}

IndexedRoot root_at_index(const DPoly& p, int n, double precision) {
  return root_at_index(to_rational(p), n, precision);
}

}  // namespace prc
