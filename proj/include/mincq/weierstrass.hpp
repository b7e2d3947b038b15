#pragma once

#include "mincq/laurent.hpp"
#include "mincq/sylvester.hpp"

namespace mincq {

/// Phi1^2 + Phi2^2 + Phi3^2.
CLaurent isotropy_defect(const QLaurent& phi);

/// A Laurent polynomial Phi certified to satisfy Phi0 == 0 and
/// Phi1^2 + Phi2^2 + Phi3^2 == 0.
class IsotropicCurve {
 public:
  explicit IsotropicCurve(QLaurent phi);

  const QLaurent& phi() const { return phi_; }

 private:
  QLaurent phi_;
};

/// Weierstrass-Enneper data (f, g) with meromorphic g = g_num / g_den.
struct WEData {
  CLaurent f;
  CLaurent g_num, g_den;
};

/// Preimage triple of the planar-PH-style representation
/// Phi = w (p^2 - q^2, 2pq, i(p^2 + q^2)).
struct PQWData {
  CPoly p, q, w;
};

/// Rational scale num/den; a monomial denominator is folded into num so that
/// polynomial and Laurent scales have den == 1.
struct LambdaScale {
  CLaurent num, den;

  LambdaScale() : num(ComplexScalar(1)), den(ComplexScalar(1)) {}
  LambdaScale(CLaurent n, CLaurent d);

  bool is_laurent() const;
  bool is_polynomial() const;
  /// Requires is_laurent().
  const CLaurent& laurent() const;

  ComplexScalar eval(const ComplexScalar& z) const;
  std::complex<double> eval_f(std::complex<double> z) const;

  bool operator==(const LambdaScale& o) const;
};

/// Preimage pair (A, lambda) with Phi = lambda A L A^c.
struct PreimagePair {
  QLaurent A;
  LambdaScale lambda;

  /// The represented isotropic curve lambda A L A^c; throws NotDivisible when
  /// the rational scale does not cancel to a Laurent polynomial.
  QLaurent phi() const;
};

IsotropicCurve phi_from_fg(const WEData& d);
WEData fg_from_phi(const IsotropicCurve& phi);

IsotropicCurve phi_from_pqw(const PQWData& d);
PQWData pqw_from_pair(const PreimagePair& pair);
PreimagePair pair_from_pqw(const PQWData& d);

/// A = numerator of chi = Phi h + h L, lambda = 1/A^s.  Certified by
/// lambda A L A^c == Phi, exactly.
PreimagePair pair_from_phi_rational(const IsotropicCurve& phi, int h_budget = 64);

///// Constructive reduction for polynomial Phi: lambda = gcd of components
/// (monic), Bezout step yields A with A^s == 1.
PreimagePair pair_from_phi_polynomial(const IsotropicCurve& phi, int h_budget = 64);

/// Real-coefficient representative B with A L A^c == B L B^c.
QPoly real_preimage(const QPoly& A);

}  // namespace mincq
