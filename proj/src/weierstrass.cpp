#include "mincq/weierstrass.hpp"

#include <cassert>

namespace mincq {

CLaurent isotropy_defect(const QLaurent& phi) {
  CLaurent d;
  for (int w = 1; w < 4; ++w) {
    CLaurent c = component(phi, w);
    d += c * c;
  }
  return d;
}

IsotropicCurve::IsotropicCurve(QLaurent phi) : phi_(std::move(phi)) {
  if (!component(phi_, 0).is_zero())
    throw NotIsotropic("Phi has a nonzero scalar part");
  if (!isotropy_defect(phi_).is_zero())
    throw NotIsotropic("Phi1^2 + Phi2^2 + Phi3^2 != 0");
}

LambdaScale::LambdaScale(CLaurent n, CLaurent d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DivisionByZero("lambda with zero denominator");
  if (den.terms().size() == 1) {
    // Fold a monomial denominator c z^k into the numerator.
    auto [e, c] = *den.terms().begin();
    num = num.scaled(c.inverse()).shifted(-e);
    den = CLaurent(ComplexScalar(1));
  }
}

bool LambdaScale::is_laurent() const {
  return den == CLaurent(ComplexScalar(1));
}

bool LambdaScale::is_polynomial() const { return is_laurent() && num.is_polynomial(); }

const CLaurent& LambdaScale::laurent() const {
  if (!is_laurent()) throw NonPolynomialScale("lambda is a general rational function");
  return num;
}

ComplexScalar LambdaScale::eval(const ComplexScalar& z) const {
  ComplexScalar d = den.eval(z);
  if (d.is_zero()) throw PoleEvaluation("lambda pole");
  return num.eval(z) / d;
}

std::complex<double> LambdaScale::eval_f(std::complex<double> z) const {
  return mincq::eval_f(num, z) / mincq::eval_f(den, z);
}

bool LambdaScale::operator==(const LambdaScale& o) const {
  return num * o.den == o.num * den;
}

QLaurent PreimagePair::phi() const {
  QLaurent alac = A * QLaurent(0, ComplexQuaternion::L()) * conj_quat(A);
  QLaurent scaled = to_qlaurent(lambda.num) * alac;
  if (lambda.is_laurent()) return scaled;
  return assemble(divide_exact(component(scaled, 0), lambda.den),
                  divide_exact(component(scaled, 1), lambda.den),
                  divide_exact(component(scaled, 2), lambda.den),
                  divide_exact(component(scaled, 3), lambda.den));
}

IsotropicCurve phi_from_fg(const WEData& d) {
  if (d.g_den.is_zero()) throw DegenerateWE("g denominator is zero");
  CLaurent gd2 = d.g_den * d.g_den;
  CLaurent gn2 = d.g_num * d.g_num;
  ComplexScalar half(Rational(1, 2));
  CLaurent phi1, phi2, phi3;
  try {
    phi1 = divide_exact(d.f * (gd2 - gn2), gd2).scaled(half);
    phi2 = divide_exact(d.f * (gd2 + gn2), gd2).scaled(half * imag_unit());
    phi3 = divide_exact(d.f * d.g_num, d.g_den);
  } catch (const NotDivisible&) {
    throw DegenerateWE("(f, g) violate the compatibility condition");
  }
  return IsotropicCurve(assemble(CLaurent(), phi1, phi2, phi3));
}

WEData fg_from_phi(const IsotropicCurve& phi) {
  CLaurent phi1 = component(phi.phi(), 1), phi2 = component(phi.phi(), 2),
           phi3 = component(phi.phi(), 3);
  CLaurent f = phi1 - phi2.scaled(imag_unit());
  if (f.is_zero()) throw DegenerateWE("Phi1 - i Phi2 == 0; g undefined");
  CLaurent g_num = phi3, g_den = f;
  if (!g_num.is_zero()) {
    // Reduce the representative of g by the polynomial gcd and the valuation.
    CPoly g = poly_gcd(g_num, g_den);
    int shift = std::min(g_num.valuation(), g_den.valuation());
    g_num = divide_exact(g_num.shifted(-shift), g);
    g_den = divide_exact(g_den.shifted(-shift), g);
  }
  return {f, g_num, g_den};
}

IsotropicCurve phi_from_pqw(const PQWData& d) {
  CLaurent p2 = d.p * d.p, q2 = d.q * d.q;
  CLaurent phi1 = d.w * (p2 - q2);
  CLaurent phi2 = (d.w * d.p * d.q).scaled(ComplexScalar(2));
  CLaurent phi3 = (d.w * (p2 + q2)).scaled(imag_unit());
  return IsotropicCurve(assemble(CLaurent(), phi1, phi2, phi3));
}

PreimagePair pair_from_pqw(const PQWData& d) {
  if (!d.w.is_polynomial() || !d.p.is_polynomial() || !d.q.is_polynomial())
    throw NonPolynomialScale("pqw data must be polynomial");
  QLaurent A = assemble(d.p, d.p, d.q, d.q);
  // lambda = w/2: with A = p + pi + qj + qk one has A L A^c = 2(p^2-q^2,
  // 2pq, i(p^2+q^2)), so the half compensates the algebra's factor 2.
  PreimagePair pair;
  pair.A = A;
  pair.lambda = LambdaScale(d.w.scaled(ComplexScalar(Rational(1, 2))), CLaurent(ComplexScalar(1)));
  return pair;
}

PQWData pqw_from_pair(const PreimagePair& pair) {
  if (!pair.lambda.is_polynomial()) throw NonPolynomialScale("lambda is not polynomial");
  ComplexScalar half(Rational(1, 2));
  ComplexScalar I = imag_unit();
  CLaurent a0 = component(pair.A, 0), a1 = component(pair.A, 1),
           a2 = component(pair.A, 2), a3 = component(pair.A, 3);
  PQWData d;
  d.p = (a0 + a1 + a2.scaled(I) - a3.scaled(I)).scaled(half);
  d.q = (a0.scaled(I) - a1.scaled(I) + a2 + a3).scaled(half);
  d.w = pair.lambda.laurent().scaled(ComplexScalar(2));
  return d;
}

PreimagePair pair_from_phi_rational(const IsotropicCurve& phi, int h_budget) {
  QLaurent g(0, ComplexQuaternion::L());
  QLaurent h = find_invertible_h(phi.phi(), g, h_budget);
  QLaurent chi = solve_conjugator(phi.phi(), g, h);
  // Clear negative exponents: A is the numerator of chi.
  int val = chi.valuation();
  QLaurent A = val < 0 ? chi.shifted(-val) : chi;
  PreimagePair pair;
  pair.A = A;
  pair.lambda = LambdaScale(CLaurent(ComplexScalar(1)), qsnorm(A));
  assert(pair.phi() == phi.phi());
  return pair;
}

PreimagePair pair_from_phi_polynomial(const IsotropicCurve& phi, int h_budget) {
  if (!phi.phi().is_polynomial()) throw NotPolynomial("Phi has negative exponents");
  CLaurent p1 = component(phi.phi(), 1), p2 = component(phi.phi(), 2),
           p3 = component(phi.phi(), 3);
  if (phi.phi().is_zero()) {
    PreimagePair pair;
    pair.A = QLaurent();
    return pair;
  }
  CPoly lambda = poly_gcd({p1, p2, p3});
  QLaurent phi_red = assemble(CLaurent(), divide_exact(p1, lambda),
                              divide_exact(p2, lambda), divide_exact(p3, lambda));
  IsotropicCurve reduced(phi_red);
  QPoly C = pair_from_phi_rational(reduced, h_budget).A;
  ComplexScalar I = imag_unit();
  CPoly c12 = component(C, 1) + component(C, 2).scaled(I);
  CPoly c03 = component(C, 0).scaled(I) + component(C, 3);
  CPoly sigma = poly_gcd(c12, c03);
  auto bz = bezout(divide_exact(c12, sigma), divide_exact(c03, sigma));
  assert(bz.g == CPoly(ComplexScalar(1)));
  ComplexScalar half(Rational(1, 2));
  QLaurent h = assemble(bz.alpha.scaled(half), CLaurent(), -bz.beta.scaled(half), CLaurent());
  QLaurent A = phi_red * h + h * QLaurent(0, ComplexQuaternion::L());
  // A^s is the constant (alpha c12/sigma + beta c03/sigma)^2 / C^s scale;
  // normalize it to exactly 1.
  CLaurent As = qsnorm(A);
  if (As.is_zero() || !As.is_polynomial() || As.degree() != 0)
    throw NotExactSquare("A^s is not a nonzero constant");
  auto root = exact_sqrt(As.coeff(0).inverse());
  if (!root) throw NotExactSquare("A^s has no exact inverse square root");
  A = A * QLaurent(0, ComplexQuaternion(*root));
  PreimagePair pair;
  pair.A = A;
  pair.lambda = LambdaScale(lambda, CLaurent(ComplexScalar(1)));
  assert(qsnorm(pair.A) == CLaurent(ComplexScalar(1)));
  assert(pair.phi() == phi.phi());
  return pair;
}

QPoly real_preimage(const QPoly& A) {
  QPoly B;
  for (auto& [e, a] : A.terms()) {
    Rational b0 = a.z3.im + a.z0.re;
    Rational b1 = a.z1.re - a.z2.im;
    Rational b2 = a.z1.im + a.z2.re;
    Rational b3 = a.z3.re - a.z0.im;
    B.set(e, ComplexQuaternion(ComplexScalar(b0), ComplexScalar(b1), ComplexScalar(b2),
                               ComplexScalar(b3)));
  }
  return B;
}

}  // namespace mincq
