#pragma once

// Exact scalar backbone: arbitrary-precision integers and rationals.
// Everything downstream (lattice reductions, field arithmetic, report
// printing) is built on these two types, so intermediate growth in the
// reductions is harmless.
//
// The multiprecision backends are wrapped in plain classes of this namespace
// instead of being used directly: matrices of these scalars then never pull
// the backend's namespace into argument-dependent lookup, whose templated
// operators choke on expression types that carry a `const_iterator` typedef
// without being containers.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <utility>

#include "cstar/error.hpp"

namespace cstar {

namespace mp = boost::multiprecision;

class Int {
 public:
  Int() = default;
  Int(int v) : v_(v) {}                 // NOLINT: scalar literals everywhere
  Int(long v) : v_(v) {}                // NOLINT
  Int(long long v) : v_(v) {}          // NOLINT
  Int(unsigned long v) : v_(v) {}      // NOLINT
  Int(unsigned long long v) : v_(v) {}  // NOLINT
  Int(mp::cpp_int v) : v_(std::move(v)) {}  // NOLINT: internal interop
  explicit Int(const std::string& digits) : v_(digits) {}

  const mp::cpp_int& raw() const { return v_; }

  int sign() const { return v_.sign(); }
  std::string str() const { return v_.str(); }
  template <class T>
  T convert_to() const {
    return v_.template convert_to<T>();
  }

  Int operator-() const { return Int(mp::cpp_int(-v_)); }

  friend Int operator+(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ + b.v_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ - b.v_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ * b.v_)); }
  friend Int operator/(const Int& a, const Int& b) {
    if (b.v_ == 0) fail(Err::DivisionByZero, "integer division by zero");
    return Int(mp::cpp_int(a.v_ / b.v_));  // truncates toward zero
  }
  friend Int operator%(const Int& a, const Int& b) {
    if (b.v_ == 0) fail(Err::DivisionByZero, "integer remainder by zero");
    return Int(mp::cpp_int(a.v_ % b.v_));
  }

  Int& operator+=(const Int& b) { v_ += b.v_; return *this; }
  Int& operator-=(const Int& b) { v_ -= b.v_; return *this; }
  Int& operator*=(const Int& b) { v_ *= b.v_; return *this; }
  Int& operator/=(const Int& b) { return *this = *this / b; }
  Int& operator%=(const Int& b) { return *this = *this % b; }
  Int& operator++() { ++v_; return *this; }
  Int& operator--() { --v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& a);

 private:
  mp::cpp_int v_;
};

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}        // NOLINT
  Rational(long v) : v_(v) {}       // NOLINT
  Rational(long long v) : v_(v) {}  // NOLINT
  Rational(unsigned long v) : v_(v) {}       // NOLINT
  Rational(unsigned long long v) : v_(v) {}  // NOLINT
  Rational(const Int& v) : v_(v.raw()) {}    // NOLINT
  Rational(mp::cpp_rational v) : v_(std::move(v)) {}  // NOLINT: internal interop
  Rational(const Int& n, const Int& d) {
    if (d == 0) fail(Err::DivisionByZero, "rational with zero denominator");
    v_ = mp::cpp_rational(n.raw(), d.raw());
  }

  const mp::cpp_rational& raw() const { return v_; }

  int sign() const { return v_.sign(); }
  Int numerator() const { return Int(mp::numerator(v_)); }
  Int denominator() const { return Int(mp::denominator(v_)); }
  double toDouble() const { return v_.convert_to<double>(); }

  Rational operator-() const { return Rational(mp::cpp_rational(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mp::cpp_rational(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mp::cpp_rational(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mp::cpp_rational(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) fail(Err::DivisionByZero, "rational division by zero");
    return Rational(mp::cpp_rational(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  mp::cpp_rational v_;
};

inline Int num(const Rational& r) { return r.numerator(); }
inline Int den(const Rational& r) { return r.denominator(); }

inline int sgn(const Int& a) { return a.sign(); }
inline int sgn(const Rational& a) { return a.sign(); }

inline Int absInt(const Int& a) { return a < 0 ? -a : a; }

inline Int gcdInt(const Int& a, const Int& b) { return Int(mp::gcd(a.raw(), b.raw())); }
inline Int lcmInt(const Int& a, const Int& b) { return Int(mp::lcm(a.raw(), b.raw())); }

// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
struct XGcd {
  Int g, s, t;
};

inline XGcd xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;  // truncated division is fine inside Euclid
    Int r = a - q * b;
    a = std::exchange(b, r);
    Int s2 = s0 - q * s1;
    s0 = std::exchange(s1, s2);
    Int t2 = t0 - q * t1;
    t0 = std::exchange(t1, t2);
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

// Floor division/modulo (plain / truncates toward zero).
inline Int floorDiv(const Int& a, const Int& b) {
  if (b == 0) fail(Err::DivisionByZero, "floorDiv by zero");
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floorOf(const Rational& r) { return floorDiv(num(r), den(r)); }

// gcd on rationals: generator of the Z-module a*Z + b*Z inside Q.
inline Rational gcdRat(const Rational& a, const Rational& b) {
  Int d = lcmInt(den(a), den(b));
  Int na = num(a) * (d / den(a));
  Int nb = num(b) * (d / den(b));
  return Rational(gcdInt(na, nb), d);
}

inline Rational lcmRat(const Rational& a, const Rational& b) {
  // dual to gcdRat; only used for torsion orders, where inputs are > 0
  Int d = gcdInt(den(a), den(b));
  return Rational(lcmInt(num(a), num(b)), d);
}

inline double toDouble(const Rational& r) { return r.toDouble(); }
inline double toDouble(const Int& n) { return n.convert_to<double>(); }

inline std::string str(const Int& n) { return n.str(); }

}  // namespace cstar

namespace Eigen {

template <>
struct NumTraits<cstar::Int> {
  using Real = cstar::Int;
  using NonInteger = cstar::Rational;
  using Nested = cstar::Int;
  using Literal = cstar::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<cstar::Rational> {
  using Real = cstar::Rational;
  using NonInteger = cstar::Rational;
  using Nested = cstar::Rational;
  using Literal = cstar::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
