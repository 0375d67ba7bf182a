#pragma once

// Real quadratic field arithmetic: values p + q*sqrt(d) with p, q rational
// and d squarefree.  A value with q == 0 is canonicalized to d == 0, so plain
// rationals mix freely with any field; combining values from two genuinely
// different fields (say sqrt(2) and sqrt(3)) is a hard error rather than a
// silent tower extension.

#include <cstdint>
#include <string>

#include "cstar/error.hpp"
#include "cstar/numeric.hpp"

namespace cstar {

bool isSquarefree(std::uint64_t d);

// The ambient field Q(sqrt(d)); d in {0, 1} means plain Q.
struct FieldContext {
  std::uint64_t d = 0;

  static FieldContext rationals() { return FieldContext{0}; }
  static FieldContext make(std::uint64_t d) {
    if (d >= 2 && !isSquarefree(d)) fail(Err::NonSquarefreeD, "d = " + std::to_string(d));
    return FieldContext{d < 2 ? 0 : d};
  }
  bool trivial() const { return d < 2; }
  bool operator==(const FieldContext&) const = default;
};

class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(int v) : p_(v) {}  // NOLINT: implicit on purpose, matches Rational's ergonomics
  QuadReal(const Rational& p) : p_(p) {}
  QuadReal(Rational p, Rational q, std::uint64_t d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
    normalize();
  }

  static QuadReal sqrtD(const FieldContext& ctx) {
    if (ctx.trivial()) fail(Err::FieldMismatch, "sqrt requested over plain Q");
    return QuadReal(0, 1, ctx.d);
  }

  const Rational& rationalPart() const { return p_; }
  const Rational& quadPart() const { return q_; }
  std::uint64_t fieldD() const { return d_; }

  bool isZero() const { return p_ == 0 && q_ == 0; }
  bool isRational() const { return q_ == 0; }

  // Exact sign of p + q*sqrt(d); no floating point involved.
  int sign() const;

  QuadReal operator-() const { return QuadReal(-p_, -q_, d_); }
  QuadReal conj() const { return QuadReal(p_, -q_, d_); }  // Galois conjugate

  friend QuadReal operator+(const QuadReal& a, const QuadReal& b) {
    std::uint64_t d = unifyField(a, b);
    return QuadReal(a.p_ + b.p_, a.q_ + b.q_, d);
  }
  friend QuadReal operator-(const QuadReal& a, const QuadReal& b) { return a + (-b); }
  friend QuadReal operator*(const QuadReal& a, const QuadReal& b) {
    std::uint64_t d = unifyField(a, b);
    Rational dd(d);
    return QuadReal(a.p_ * b.p_ + a.q_ * b.q_ * dd, a.p_ * b.q_ + a.q_ * b.p_, d);
  }
  friend QuadReal operator/(const QuadReal& a, const QuadReal& b) { return a * b.inverse(); }

  QuadReal inverse() const {
    if (isZero()) fail(Err::DivisionByZero, "inverse of 0");
    // (p + q sqrt(d))^-1 = (p - q sqrt(d)) / (p^2 - q^2 d); the norm is
    // nonzero because sqrt(d) is irrational.
    Rational n = p_ * p_ - q_ * q_ * Rational(d_);
    if (n == 0) fail(Err::Internal, "zero norm for nonzero element (d not squarefree?)");
    return QuadReal(p_ / n, -q_ / n, d_);
  }

  QuadReal& operator+=(const QuadReal& b) { return *this = *this + b; }
  QuadReal& operator-=(const QuadReal& b) { return *this = *this - b; }
  QuadReal& operator*=(const QuadReal& b) { return *this = *this * b; }
  QuadReal& operator/=(const QuadReal& b) { return *this = *this / b; }

  friend bool operator==(const QuadReal& a, const QuadReal& b) {
    // representation is unique once q==0 forces d==0, but tolerate the
    // same field written with different tags after arithmetic
    if (a.q_ == 0 && b.q_ == 0) return a.p_ == b.p_;
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const QuadReal& a, const QuadReal& b) { return !(a == b); }
  friend bool operator<(const QuadReal& a, const QuadReal& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QuadReal& a, const QuadReal& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const QuadReal& a, const QuadReal& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const QuadReal& a, const QuadReal& b) { return (a - b).sign() >= 0; }

  double toDouble() const;

 private:
  void normalize() {
    if (q_ == 0) d_ = 0;
    if (q_ != 0 && d_ < 2) fail(Err::FieldMismatch, "irrational part without a field");
  }
  static std::uint64_t unifyField(const QuadReal& a, const QuadReal& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    fail(Err::FieldMismatch,
         "mixing sqrt(" + std::to_string(a.d_) + ") with sqrt(" + std::to_string(b.d_) + ")");
  }

  Rational p_ = 0;  // rational coordinate
  Rational q_ = 0;  // coefficient of sqrt(d)
  std::uint64_t d_ = 0;
};

// Coordinates of x in the Q-basis {1, sqrt(d)}.
inline std::pair<Rational, Rational> qCoords(const QuadReal& x) {
  return {x.rationalPart(), x.quadPart()};
}

inline int qrealSign(const QuadReal& x) { return x.sign(); }
inline QuadReal abs(const QuadReal& x) { return x.sign() < 0 ? -x : x; }

struct QuadComplex {
  QuadReal re, im;

  QuadComplex() = default;
  QuadComplex(QuadReal r) : re(std::move(r)) {}  // NOLINT
  QuadComplex(QuadReal r, QuadReal i) : re(std::move(r)), im(std::move(i)) {}

  bool isZero() const { return re.isZero() && im.isZero(); }
  bool isReal() const { return im.isZero(); }

  QuadComplex operator-() const { return {-re, -im}; }
  QuadComplex conj() const { return {re, -im}; }

  friend QuadComplex operator+(const QuadComplex& a, const QuadComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend QuadComplex operator-(const QuadComplex& a, const QuadComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend QuadComplex operator*(const QuadComplex& a, const QuadComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const QuadComplex& a, const QuadComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const QuadComplex& a, const QuadComplex& b) { return !(a == b); }
};

inline QuadComplex operator*(const Rational& c, const QuadComplex& z) {
  return {QuadReal(c) * z.re, QuadReal(c) * z.im};
}

}  // namespace cstar
