#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

#include "mincq/errors.hpp"

namespace mincq {

using Rational = mpq_class;

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Gaussian rational a + \imath b.  All arithmetic is exact.
struct ComplexScalar {
  Rational re, im;

  ComplexScalar() : re(0), im(0) {}
  ComplexScalar(Rational r) : re(std::move(r)), im(0) {}
  ComplexScalar(long r) : re(r), im(0) {}
  ComplexScalar(int r) : re(r), im(0) {}
  ComplexScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ComplexScalar conj() const { return {re, -im}; }
  /// |z|^2 = a^2 + b^2, a rational number.
  Rational norm() const { return re * re + im * im; }

  ComplexScalar operator-() const { return {-re, -im}; }
  ComplexScalar operator+(const ComplexScalar& o) const { return {re + o.re, im + o.im}; }
  ComplexScalar operator-(const ComplexScalar& o) const { return {re - o.re, im - o.im}; }
  ComplexScalar operator*(const ComplexScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexScalar operator/(const ComplexScalar& o) const {
    if (o.is_zero()) throw DivisionByZero("complex division by zero");
    Rational n = o.norm();
    ComplexScalar p = *this * o.conj();
    return {p.re / n, p.im / n};
  }
  ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
  ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
  ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }
  ComplexScalar& operator/=(const ComplexScalar& o) { return *this = *this / o; }

  bool operator==(const ComplexScalar& o) const { return re == o.re && im == o.im; }
  bool operator!=(const ComplexScalar& o) const { return !(*this == o); }

  ComplexScalar inverse() const { return ComplexScalar(1) / *this; }

  ComplexScalar pow(long n) const;

  std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }

  std::string str() const;
};

inline ComplexScalar operator*(const Rational& r, const ComplexScalar& z) {
  return ComplexScalar(r) * z;
}

/// The imaginary unit \imath.
inline ComplexScalar imag_unit() { return {Rational(0), Rational(1)}; }

/// Exact complex square root, if one exists in the Gaussian rationals.
/// The representative has re > 0, or re == 0 and im >= 0.
std::optional<ComplexScalar> exact_sqrt(const ComplexScalar& z);

/// Parses "num/den" or "num" into an exact rational.
Rational parse_rational(const std::string& s);

/// Formats a rational as "num/den" ("num" when the denominator is 1).
std::string format_rational(const Rational& r);

/// Deterministic lexicographic order (re, then im); used for canonical
/// sign choices and sorted output, not a field order.
bool lex_less(const ComplexScalar& a, const ComplexScalar& b);

}  // namespace mincq
