#pragma once

#include <array>
#include <complex>
#include <string>

#include "mincq/scalar.hpp"

namespace mincq {

/// Element of the complex quaternions H_C = H (x) C, written
/// z = z0 + z1 i + z2 j + z3 k with complex coefficients z0..z3.
struct ComplexQuaternion {
  ComplexScalar z0, z1, z2, z3;

  ComplexQuaternion() = default;
  ComplexQuaternion(ComplexScalar a, ComplexScalar b, ComplexScalar c, ComplexScalar d)
      : z0(std::move(a)), z1(std::move(b)), z2(std::move(c)), z3(std::move(d)) {}
  explicit ComplexQuaternion(const ComplexScalar& scalar) : z0(scalar) {}

  static ComplexQuaternion one() { return {1, 0, 0, 0}; }
  static ComplexQuaternion i() { return {0, 1, 0, 0}; }
  static ComplexQuaternion j() { return {0, 0, 1, 0}; }
  static ComplexQuaternion k() { return {0, 0, 0, 1}; }
  /// The fixed null prototype L = i + \imath j.
  static ComplexQuaternion L() { return {0, 1, imag_unit(), 0}; }

  bool is_zero() const { return z0.is_zero() && z1.is_zero() && z2.is_zero() && z3.is_zero(); }
  bool is_vectorial() const { return z0.is_zero(); }
  bool has_real_coefficients() const {
    return z0.is_real() && z1.is_real() && z2.is_real() && z3.is_real();
  }

  ComplexScalar scalar_part() const { return z0; }
  ComplexQuaternion vector_part() const { return {0, z1, z2, z3}; }

  ComplexQuaternion operator-() const { return {-z0, -z1, -z2, -z3}; }
  ComplexQuaternion operator+(const ComplexQuaternion& o) const {
    return {z0 + o.z0, z1 + o.z1, z2 + o.z2, z3 + o.z3};
  }
  ComplexQuaternion operator-(const ComplexQuaternion& o) const {
    return {z0 - o.z0, z1 - o.z1, z2 - o.z2, z3 - o.z3};
  }
  /// Quaternion product under i^2 = j^2 = k^2 = -1, ij = -ji = k.
  ComplexQuaternion operator*(const ComplexQuaternion& o) const {
    return {z0 * o.z0 - z1 * o.z1 - z2 * o.z2 - z3 * o.z3,
            z0 * o.z1 + z1 * o.z0 + z2 * o.z3 - z3 * o.z2,
            z0 * o.z2 - z1 * o.z3 + z2 * o.z0 + z3 * o.z1,
            z0 * o.z3 + z1 * o.z2 - z2 * o.z1 + z3 * o.z0};
  }
  ComplexQuaternion operator*(const ComplexScalar& s) const {
    return {z0 * s, z1 * s, z2 * s, z3 * s};
  }
  ComplexQuaternion& operator+=(const ComplexQuaternion& o) { return *this = *this + o; }
  ComplexQuaternion& operator-=(const ComplexQuaternion& o) { return *this = *this - o; }

  bool operator==(const ComplexQuaternion& o) const {
    return z0 == o.z0 && z1 == o.z1 && z2 == o.z2 && z3 == o.z3;
  }
  bool operator!=(const ComplexQuaternion& o) const { return !(*this == o); }

  /// Quaternionic conjugate z^c = z0 - z_v.
  ComplexQuaternion conj_quat() const { return {z0, -z1, -z2, -z3}; }
  /// Complex conjugate applied to each coefficient.
  ComplexQuaternion conj_complex() const {
    return {z0.conj(), z1.conj(), z2.conj(), z3.conj()};
  }

  /// Complex squared norm z^s = z z^c = z0^2 + z1^2 + z2^2 + z3^2.
  ComplexScalar snorm() const { return z0 * z0 + z1 * z1 + z2 * z2 + z3 * z3; }

  /// z^{-1} = z^c / z^s.  Throws ZeroComplexNorm for null quaternions.
  ComplexQuaternion inverse() const {
    ComplexScalar s = snorm();
    if (s.is_zero()) throw ZeroComplexNorm("non-invertible: z^s = 0");
    ComplexScalar si = s.inverse();
    return conj_quat() * si;
  }

  std::string str() const {
    return "(" + z0.str() + ", " + z1.str() + ", " + z2.str() + ", " + z3.str() + ")";
  }
};

inline ComplexQuaternion operator*(const ComplexScalar& s, const ComplexQuaternion& q) {
  return q * s;
}

/// Floating mirror of ComplexQuaternion for numeric evaluation paths.
struct FloatComplexQuaternion {
  std::array<std::complex<double>, 4> c{};

  FloatComplexQuaternion() = default;
  explicit FloatComplexQuaternion(const ComplexQuaternion& q)
      : c{q.z0.to_double(), q.z1.to_double(), q.z2.to_double(), q.z3.to_double()} {}
  FloatComplexQuaternion(std::complex<double> a, std::complex<double> b,
                         std::complex<double> d, std::complex<double> e)
      : c{a, b, d, e} {}

  std::complex<double> snorm() const {
    return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
  }
  FloatComplexQuaternion operator*(const FloatComplexQuaternion& o) const {
    return {c[0] * o.c[0] - c[1] * o.c[1] - c[2] * o.c[2] - c[3] * o.c[3],
            c[0] * o.c[1] + c[1] * o.c[0] + c[2] * o.c[3] - c[3] * o.c[2],
            c[0] * o.c[2] - c[1] * o.c[3] + c[2] * o.c[0] + c[3] * o.c[1],
            c[0] * o.c[3] + c[1] * o.c[2] - c[2] * o.c[1] + c[3] * o.c[0]};
  }
};

}  // namespace mincq
