#include "mincq/laurent.hpp"

#include <cassert>

namespace mincq {

FloatComplexQuaternion eval_f(const QLaurent& p, std::complex<double> z) {
  FloatComplexQuaternion acc;
  for (auto& [e, c] : p.terms()) {
    std::complex<double> ze = std::pow(z, e);
    FloatComplexQuaternion fc(c);
    for (int t = 0; t < 4; ++t) acc.c[t] += fc.c[t] * ze;
  }
  return acc;
}

std::complex<double> eval_f(const CLaurent& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto& [e, c] : p.terms()) acc += c.to_double() * std::pow(z, e);
  return acc;
}

QLaurent conj_quat(const QLaurent& p) {
  QLaurent r;
  for (auto& [e, c] : p.terms()) r.set(e, c.conj_quat());
  return r;
}

QLaurent conj_complex_coeffs(const QLaurent& p) {
  QLaurent r;
  for (auto& [e, c] : p.terms()) r.set(e, c.conj_complex());
  return r;
}

CLaurent component(const QLaurent& p, int which) {
  CLaurent r;
  for (auto& [e, c] : p.terms()) {
    const ComplexScalar* comp[4] = {&c.z0, &c.z1, &c.z2, &c.z3};
    r.set(e, *comp[which]);
  }
  return r;
}

QLaurent assemble(const CLaurent& c0, const CLaurent& c1, const CLaurent& c2,
                  const CLaurent& c3) {
  QLaurent r;
  const CLaurent* cs[4] = {&c0, &c1, &c2, &c3};
  for (int w = 0; w < 4; ++w)
    for (auto& [e, c] : cs[w]->terms()) {
      ComplexQuaternion q = r.coeff(e);
      ComplexScalar* comp[4] = {&q.z0, &q.z1, &q.z2, &q.z3};
      *comp[w] += c;
      r.set(e, q);
    }
  return r;
}

CLaurent qsnorm(const QLaurent& p) {
  QLaurent prod = p * conj_quat(p);
  CLaurent s = component(prod, 0);
  for (int w = 1; w < 4; ++w) assert(component(prod, w).is_zero());
  return s;
}

namespace {

ComplexScalar leading(const CPoly& p) { return p.coeff(p.degree()); }

CPoly make_monic(const CPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(leading(p).inverse());
}

}  // namespace

std::pair<CPoly, CPoly> poly_divmod(const CPoly& a, const CPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  CPoly q, r = a;
  ComplexScalar binv = leading(b).inverse();
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int e = r.degree() - db;
    ComplexScalar c = leading(r) * binv;
    CPoly t = CPoly::monomial(e, c);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

CPoly poly_gcd(const CPoly& a0, const CPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) throw BothZero("gcd(0, 0)");
  CPoly a = a0.is_zero() ? a0 : a0.shifted(-a0.valuation());
  CPoly b = b0.is_zero() ? b0 : b0.shifted(-b0.valuation());
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = b;
    b = r;
  }
  return make_monic(a);
}

CPoly poly_gcd(const std::vector<CPoly>& ps) {
  CPoly g;
  bool first = true;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    g = first ? make_monic(p.shifted(-p.valuation())) : poly_gcd(g, p);
    first = false;
  }
  if (first) throw BothZero("gcd of all-zero family");
  return g;
}

CLaurent divide_exact(const CLaurent& a, const CLaurent& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (a.is_zero()) return a;
  int va = a.valuation(), vb = b.valuation();
  auto [q, r] = poly_divmod(a.shifted(-va), b.shifted(-vb));
  if (!r.is_zero()) throw NotDivisible("inexact polynomial division");
  return q.shifted(va - vb);
}

BezoutResult bezout(const CPoly& a, const CPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("bezout(0, 0)");
  // Invariants: r0 = s0 a + t0 b, r1 = s1 a + t1 b.
  CPoly r0 = a, r1 = b;
  CPoly s0(ComplexScalar(1)), s1;
  CPoly t0, t1(ComplexScalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    CPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  ComplexScalar lead = leading(r0);
  ComplexScalar inv = lead.inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace mincq
