#pragma once

#include "mincq/surface.hpp"

namespace mincq {

/// Oriented rectangle in the parameter plane: vertices
///   P0, P0 + r1*rot, P0 + (r1 + i r2)*rot, P0 + i r2*rot
/// where rot is an exact unit complex number (rot * conj(rot) == 1).
struct RectangleDomain {
  ComplexScalar P0;
  Rational r1, r2;
  ComplexScalar rot{Rational(1), Rational(0)};

  RectangleDomain(ComplexScalar p0, Rational a, Rational b,
                  ComplexScalar rotation = ComplexScalar(Rational(1), Rational(0)));

  /// R = r1 + i r2 (before rotation).
  ComplexScalar R() const { return {r1, r2}; }
  std::array<ComplexScalar, 4> vertices() const;
  /// Axis-aligned bounding box of the four vertices, as a float Domain.
  Domain bounding_box() const;
};

/// Null pure-vector quaternions attached to the four rectangle corners.
struct CornerData {
  std::array<ComplexQuaternion, 4> phi;
};

/// Projective point [p : q] on the complex projective line.
struct ProjPoint {
  ComplexScalar p, q;

  static ProjPoint affine(const ComplexScalar& z) { return {z, ComplexScalar(1)}; }
  static ProjPoint infinity() { return {ComplexScalar(1), ComplexScalar(0)}; }
  bool is_zero() const { return p.is_zero() && q.is_zero(); }
};

/// det [a; b] — zero iff a and b coincide projectively.
ComplexScalar proj_det(const ProjPoint& a, const ProjPoint& b);
bool proj_equal(const ProjPoint& a, const ProjPoint& b);

/// Value of a cross-ratio, kept projective so that infinity is representable.
struct ProjValue {
  ComplexScalar num, den;

  bool is_finite() const { return !den.is_zero(); }
  ComplexScalar value() const;
  bool operator==(const ProjValue& o) const { return num * o.den == o.num * den; }
};

/// Null-cone parameter [s : t] with the scale nu such that
/// phi == nu * null_point(s, t).
struct NullParam {
  ComplexScalar s, t;
  ComplexScalar nu;

  ProjPoint proj() const { return {s, t}; }
};

/// N(s, t) = (s^2+t^2) i + i(s^2-t^2) j + 2 i s t k (the second and third
/// "i" being the complex unit); a null pure-vector quaternion.
ComplexQuaternion null_point(const ComplexScalar& s, const ComplexScalar& t);

/// Inverts null_point: phi == nu * null_point(s, t).  Prefers the exact
/// square-root representative (nu == 1) when it exists in Q(i).
NullParam null_param(const ComplexQuaternion& phi);

/// CR(a,b,c,d) = ((a-c)(b-d)) / ((b-c)(a-d)), homogeneous form.
ProjValue cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                      const ProjPoint& d);

/// Exact defects of the three corner conditions.
struct ConditionReport {
  std::array<ComplexScalar, 4> scalar_part;  // phi + phi^c, halved
  std::array<ComplexScalar, 4> nullity;      // phi phi^c
  ComplexQuaternion linear_defect;           // |R|^2 p0 + R^2 p1 - |R|^2 p2 - R^2 p3
  bool cross_ratio_defined = false;
  ProjValue cr_corners, cr_params;

  bool eq1_pass() const;
  bool eq2_pass() const { return linear_defect == ComplexQuaternion{}; }
  bool eq3_pass() const { return cross_ratio_defined && cr_corners == cr_params; }
  bool all_pass() const { return eq1_pass() && eq2_pass() && eq3_pass(); }
};

ConditionReport check_conditions(const RectangleDomain& rect, const CornerData& data);

/// Solves |R|^2 nu0 d0 + R^2 nu1 d1 - |R|^2 nu2 d2 - R^2 nu3 d3 = 0 for the
/// one-dimensional family of scales, normalized to nu3 = 1 when possible.
std::array<ComplexScalar, 4> solve_scales(const RectangleDomain& rect,
                                          const std::array<ComplexQuaternion, 4>& directions);

/// z -> [m00 z + m01 : m10 z + m11].
struct MobiusMap {
  ComplexScalar m00, m01, m10, m11;

  ProjPoint apply(const ProjPoint& z) const {
    return {m00 * z.p + m01 * z.q, m10 * z.p + m11 * z.q};
  }
  /// First-degree polynomials s(z) = m00 z + m01 and t(z) = m10 z + m11.
  std::pair<CPoly, CPoly> st() const;
};

/// The projective map sending the first three corners to the given null
/// parameters; the fourth correspondence is verified exactly.
MobiusMap mobius_from_corners(const RectangleDomain& rect,
                              const std::array<NullParam, 4>& params);

struct LinearPreimage {
  PreimagePair pair;     // degree-1 real A; lambda absorbs a non-square scale
  MobiusMap map;
};

/// Degree-one preimage with lambda A(P_l) L A(P_l)^c == phi_l exactly at all
/// four corners.
LinearPreimage linear_preimage(const RectangleDomain& rect, const CornerData& data);

struct PatchResult {
  LinearPreimage preimage;
  SurfaceSpec spec;
  ClosedFormSurface surface;
};

PatchResult patch(const RectangleDomain& rect, const CornerData& data,
                  const std::array<Rational, 3>& base_point = {0, 0, 0});

}  // namespace mincq
