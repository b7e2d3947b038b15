#pragma once

#include <iosfwd>
#include <optional>

#include "mincq/weierstrass.hpp"

namespace mincq {

/// Spatial Pythagorean-hodograph curve data: a real preimage polynomial A(t)
/// and a real rational scale lambda(t), with hodograph
///   gamma'(t) = lambda(t) A(t) i A(t)^c
/// and parametric speed sigma = lambda A^s so that
///   gamma_1'^2 + gamma_2'^2 + gamma_3'^2 = sigma^2 exactly.
struct PHSpec {
  QLaurent A;
  LambdaScale lambda;
  std::array<Rational, 3> base_point{0, 0, 0};
};

class PHCurve {
 public:
  /// Validates that A and lambda are real and that the scaled hodograph is a
  /// Laurent polynomial; throws NotRational otherwise.
  explicit PHCurve(PHSpec spec);

  const PHSpec& spec() const { return spec_; }
  /// gamma' as a quaternion-valued Laurent polynomial (scalar part zero).
  const QLaurent& hodograph() const { return hodograph_; }
  /// Parametric speed sigma = lambda A^s.
  const CLaurent& speed() const { return speed_; }

  /// Antiderivative of the hodograph; throws NonzeroResidue when a component
  /// carries a t^{-1} term, i.e. the curve is not rational.
  const QLaurent& curve() const;

  std::array<Rational, 3> eval_exact(const Rational& t) const;
  std::array<double, 3> eval(double t) const;
  Rational speed_exact(const Rational& t) const;

  /// Exact arc-length polynomial s(t) with s(t0) = 0; requires the speed to
  /// be a polynomial with no t^{-1} term.
  CLaurent arc_length(const Rational& t0) const;

 private:
  PHSpec spec_;
  QLaurent hodograph_;
  CLaurent speed_;
  mutable std::optional<QLaurent> curve_;
};

/// CSV rows t,x,y,z,sigma over a uniform grid.
void export_phcurve_csv(const PHCurve& c, double t0, double t1, int n, std::ostream& os);

}  // namespace mincq
