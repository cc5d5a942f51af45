#pragma once

#include <gmpxx.h>
#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace ncdg {

using Rational = mpq_class;

/// Element of the field Q(i): re + i*im with arbitrary-precision rational
/// parts. Fractions are kept reduced with positive denominators (mpq_class
/// arithmetic canonicalizes; parsing canonicalizes explicitly).
struct GRat {
  Rational re, im;

  GRat() : re(0), im(0) {}
  GRat(long r) : re(r), im(0) {}
  GRat(long r, long i) : re(r), im(i) {}
  GRat(Rational r) : re(std::move(r)), im(0) {}
  GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i() { return GRat(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GRat conj() const { return GRat(re, -im); }

  /// re^2 + im^2 (a nonnegative rational).
  Rational norm2() const { return re * re + im * im; }

  GRat operator-() const { return GRat(-re, -im); }

  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
  GRat& operator*=(const GRat& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    Rational n2 = o.norm2();
    if (sgn(n2) == 0) throw std::domain_error("GRat: division by zero");
    Rational r = (re * o.re + im * o.im) / n2;
    im = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { a += b; return a; }
  friend GRat operator-(GRat a, const GRat& b) { a -= b; return a; }
  friend GRat operator*(GRat a, const GRat& b) { a *= b; return a; }
  friend GRat operator/(GRat a, const GRat& b) { a /= b; return a; }

  friend bool operator==(const GRat& a, const GRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

inline GRat conj(const GRat& x) { return x.conj(); }

/// Parses "p/q" or "p" (q > 0 after reduction).
Rational parse_rational(const std::string& s);
/// Serializes reduced with positive denominator; integers print without "/1".
std::string format_rational(const Rational& q);

std::string format_grat(const GRat& x);

std::ostream& operator<<(std::ostream& os, const GRat& x);

}  // namespace ncdg

namespace Eigen {

// GRat is registered as a real-kind scalar: products never implicitly
// conjugate, so use transpose() plus explicit conjugation, never adjoint().
template <>
struct NumTraits<ncdg::GRat> {
  using Real = ncdg::GRat;
  using NonInteger = ncdg::GRat;
  using Literal = ncdg::GRat;
  using Nested = ncdg::GRat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return ncdg::GRat(0); }
  static inline Real dummy_precision() { return ncdg::GRat(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return ncdg::GRat(0); }
  static inline Real lowest() { return ncdg::GRat(0); }
};

}  // namespace Eigen
