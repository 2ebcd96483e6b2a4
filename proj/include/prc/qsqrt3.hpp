#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <ostream>
#include <string>

namespace prc {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Exact element a + b*sqrt(3) of the field Q(sqrt 3).
class QSqrt3 {
public:
  QSqrt3() = default;
  QSqrt3(int a) : a_(a) {}
  QSqrt3(const Rational& a) : a_(a) {}
  QSqrt3(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static QSqrt3 sqrt3() { return QSqrt3(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  QSqrt3 conjugate() const { return QSqrt3(a_, -b_); }
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 3 b^2
    Rational d = a_ * a_ - 3 * b_ * b_;
    return d.sign() * sa;
  }

  double to_double() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * 1.7320508075688772;
  }

  QSqrt3& operator+=(const QSqrt3& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt3& operator-=(const QSqrt3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt3& operator*=(const QSqrt3& o) {
    Rational na = a_ * o.a_ + 3 * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QSqrt3& operator/=(const QSqrt3& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("QSqrt3: division by zero");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
  friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
  friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
  friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
  friend QSqrt3 operator-(const QSqrt3& x) { return QSqrt3(-x.a_, -x.b_); }

  friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }
  friend bool operator<(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QSqrt3& x, const QSqrt3& y) { return y < x; }
  friend bool operator<=(const QSqrt3& x, const QSqrt3& y) { return !(y < x); }
  friend bool operator>=(const QSqrt3& x, const QSqrt3& y) { return !(x < y); }

  std::string str() const {
    if (b_ == 0) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt3";
  }
  friend std::ostream& operator<<(std::ostream& os, const QSqrt3& x) { return os << x.str(); }

private:
  Rational a_{0};
  Rational b_{0};
};

inline QSqrt3 abs(const QSqrt3& x) { return x.sign() < 0 ? -x : x; }

// Scalar-dependent constants and conversions used by the templated kernels.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double sqrt3() { return 1.7320508075688772; }
  static double ratio(long n, long d) { return double(n) / double(d); }
  static double to_double(double x) { return x; }
  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
};

template <>
struct ScalarOps<QSqrt3> {
  static constexpr bool exact = true;
  static QSqrt3 sqrt3() { return QSqrt3::sqrt3(); }
  static QSqrt3 ratio(long n, long d) { return QSqrt3(Rational(n) / d); }
  static double to_double(const QSqrt3& x) { return x.to_double(); }
  static bool is_zero(const QSqrt3& x, double) { return x.sign() == 0; }
};

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational ratio(long n, long d) { return Rational(n) / d; }
  static double to_double(const Rational& x) { return static_cast<double>(x); }
  static bool is_zero(const Rational& x, double) { return x == 0; }
};

}  // namespace prc

namespace Eigen {

template <>
struct NumTraits<prc::QSqrt3> : GenericNumTraits<prc::QSqrt3> {
  typedef prc::QSqrt3 Real;
  typedef prc::QSqrt3 NonInteger;
  typedef prc::QSqrt3 Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<prc::Rational> : GenericNumTraits<prc::Rational> {
  typedef prc::Rational Real;
  typedef prc::Rational NonInteger;
  typedef prc::Rational Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
