#pragma once

// Real root isolation for univariate polynomials. Counting and isolation
// use Sturm sequences over exact integers; refinement is bisection on the
// square-free part. Roots are reported once each ("Root n" is the n-th
// smallest distinct real root).

#include "prc/qsqrt3.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace prc {

template <class S>
class RealPoly {
public:
  RealPoly() = default;
  explicit RealPoly(std::vector<S> ascending) : c_(std::move(ascending)) { trim(); }
  RealPoly(std::initializer_list<S> ascending) : c_(ascending) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  const S& operator[](int i) const { return c_[i]; }
  const S& leading() const { return c_.back(); }

  template <class T>
  T operator()(const T& x) const {
    T v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + T(*it);
    return v;
  }

  RealPoly derivative() const {
    std::vector<S> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(S(static_cast<int>(i)) * c_[i]);
    return RealPoly(std::move(d));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
  std::vector<S> c_;
};

using QPoly = RealPoly<Rational>;
using DPoly = RealPoly<double>;

struct IndexedRoot {
  int index = 0;  // 1-based among distinct real roots, ascending
  double value = 0.0;
  Rational lo, hi;  // isolating interval; lo == hi for an exact rational root
  double width = 0.0;
  int multiplicity = 1;
};

class RootIndexError : public std::out_of_range {
public:
  RootIndexError(int requested, int available)
      : std::out_of_range("root index out of range: requested " + std::to_string(requested) +
                          ", polynomial has " + std::to_string(available) + " distinct real roots"),
        requested_(requested),
        available_(available) {}
  int requested() const { return requested_; }
  int available() const { return available_; }

private:
  int requested_, available_;
};

inline constexpr double kDefaultRootPrecision = 1e-12;

QPoly to_rational(const DPoly& p);

// Exact polynomial helpers over Q.
QPoly poly_gcd(const QPoly& a, const QPoly& b);
QPoly square_free_part(const QPoly& p);
std::vector<QPoly> sturm_sequence(const QPoly& p);
int sign_at(const QPoly& p, const Rational& x);

// Number of distinct real roots.
int count_real_roots(const QPoly& p);
int count_real_roots(const DPoly& p);

// All distinct real roots, ascending, each bracketed to width <= precision.
std::vector<IndexedRoot> real_roots(const QPoly& p, double precision = kDefaultRootPrecision);
std::vector<IndexedRoot> real_roots(const DPoly& p, double precision = kDefaultRootPrecision);

// The n-th smallest distinct real root (n >= 1); RootIndexError when the
// polynomial has fewer than n real roots.
IndexedRoot root_at_index(const QPoly& p, int n, double precision = kDefaultRootPrecision);
IndexedRoot root_at_index(const DPoly& p, int n, double precision = kDefaultRootPrecision);

}  // namespace prc
