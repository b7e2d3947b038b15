#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "mincq/laurent.hpp"

using namespace mincq;

namespace {

std::mt19937 rng(20240818);

Rational rand_rational() {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ComplexScalar rand_complex() { return {rand_rational(), rand_rational()}; }

CLaurent rand_claurent(int lo = -4, int hi = 4) {
  CLaurent p;
  std::uniform_int_distribution<int> e(lo, hi);
  for (int t = 0; t < 5; ++t) p.set(e(rng), rand_complex());
  return p;
}

CPoly rand_cpoly(int deg) {
  CPoly p;
  std::uniform_int_distribution<int> e(0, deg);
  for (int t = 0; t <= deg; ++t) p.set(e(rng), rand_complex());
  if (p.is_zero()) p.set(0, ComplexScalar(1));
  return p;
}

QLaurent rand_qlaurent() {
  QLaurent p;
  std::uniform_int_distribution<int> e(-3, 3);
  for (int t = 0; t < 4; ++t)
    p.set(e(rng), ComplexQuaternion(rand_complex(), rand_complex(), rand_complex(),
                                    rand_complex()));
  return p;
}

}  // namespace

TEST_CASE("Laurent ring laws") {
  for (int trial = 0; trial < 100; ++trial) {
    CLaurent a = rand_claurent(), b = rand_claurent(), c = rand_claurent();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CLaurent{});
  }
}

TEST_CASE("quaternion Laurent multiplication respects coefficient order") {
  for (int trial = 0; trial < 50; ++trial) {
    QLaurent a = rand_qlaurent(), b = rand_qlaurent(), c = rand_qlaurent();
    CHECK((a * b) * c == a * (b * c));
    CHECK(conj_quat(a * b) == conj_quat(b) * conj_quat(a));
  }
}

TEST_CASE("derivative rules") {
  for (int trial = 0; trial < 50; ++trial) {
    CLaurent a = rand_claurent(), b = rand_claurent();
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    CHECK((a + b).derivative() == a.derivative() + b.derivative());
  }
}

TEST_CASE("evaluation") {
  CLaurent p;
  p.set(2, ComplexScalar(3));
  p.set(-1, ComplexScalar(1));
  ComplexScalar two(2);
  CHECK(p.eval(two) == ComplexScalar(Rational(25, 2)));
  CHECK_THROWS_AS(p.eval(ComplexScalar(0)), PoleEvaluation);
  // Floating evaluation agrees with exact evaluation.
  for (int trial = 0; trial < 30; ++trial) {
    CLaurent q = rand_claurent();
    ComplexScalar z = rand_complex();
    if (z.is_zero()) continue;
    auto exact = q.eval(z).to_double();
    auto num = eval_f(q, z.to_double());
    CHECK(std::abs(exact - num) < 1e-9 * (1 + std::abs(exact)));
  }
}

TEST_CASE("antiderivative inverts the derivative") {
  for (int trial = 0; trial < 100; ++trial) {
    CLaurent p = rand_claurent();
    auto F = antiderivative(p);
    CLaurent back = F.principal.derivative();
    for (auto& [pole, res] : F.log_terms) {
      CHECK(pole.is_zero());
      back.add_term(-1, res);  // d/dz (res log z) = res / z
    }
    CHECK(back == p);
  }
}

TEST_CASE("antiderivative residue bookkeeping") {
  CLaurent p;
  p.set(-1, ComplexScalar(5));
  p.set(3, ComplexScalar(1));
  auto F = antiderivative(p);
  REQUIRE(F.log_terms.size() == 1);
  CHECK(F.log_terms[0].second == ComplexScalar(5));
  CHECK(residue_at_zero(p) == ComplexScalar(5));
  // Residue is linear.
  for (int trial = 0; trial < 50; ++trial) {
    CLaurent a = rand_claurent(), b = rand_claurent();
    ComplexScalar c = rand_complex();
    CHECK(residue_at_zero(a + b) == residue_at_zero(a) + residue_at_zero(b));
    CHECK(residue_at_zero(a.scaled(c)) == residue_at_zero(a) * c);
  }
}

TEST_CASE("antiderivative with an explicit pole list rejects nonzero poles") {
  CLaurent p;
  p.set(0, ComplexScalar(1));
  CHECK_NOTHROW(antiderivative(p, {ComplexScalar(0)}));
  CHECK_THROWS_AS(antiderivative(p, {ComplexScalar(2)}), UnsupportedPoleStructure);
}

TEST_CASE("division with remainder") {
  for (int trial = 0; trial < 100; ++trial) {
    CPoly a = rand_cpoly(6), b = rand_cpoly(3);
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("exact division") {
  for (int trial = 0; trial < 50; ++trial) {
    CPoly a = rand_cpoly(4), b = rand_cpoly(3);
    CHECK(divide_exact(a * b, b) == a);
  }
  CPoly x(1, ComplexScalar(1));
  CPoly xp1 = x + CPoly(ComplexScalar(1));
  // z is a unit, so division by a pure power of z is always exact.
  CHECK(divide_exact(xp1, x * x) == xp1.shifted(-2));
  CHECK_THROWS_AS(divide_exact(xp1, x * x + CPoly(ComplexScalar(1))),
                  NotDivisible);
}

TEST_CASE("gcd certified by divisibility and a Bezout identity") {
  for (int trial = 0; trial < 60; ++trial) {
    CPoly g = rand_cpoly(2), a = rand_cpoly(3), b = rand_cpoly(3);
    CPoly f1 = g * a, f2 = g * b;
    CPoly d = poly_gcd(f1, f2);
    // Oracle 1: the gcd divides both inputs, and the planted factor divides it.
    CHECK_NOTHROW(divide_exact(f1, d));
    CHECK_NOTHROW(divide_exact(f2, d));
    CHECK_NOTHROW(divide_exact(d, g));
    // Oracle 2: Bezout certificate alpha f1 + beta f2 == d.
    BezoutResult bz = bezout(f1, f2);
    CHECK(bz.alpha * f1 + bz.beta * f2 == bz.g);
    // bezout works in the plain polynomial ring; poly_gcd strips the common
    // power of z (a unit in the Laurent ring) from its inputs first.
    CHECK(bz.g.shifted(-bz.g.valuation()) == d);
    // Monic normalization.
    CHECK(d.coeff(d.degree()) == ComplexScalar(1));
  }
  CHECK_THROWS_AS(poly_gcd(CPoly{}, CPoly{}), BothZero);
}

TEST_CASE("gcd of Laurent polynomials treats z as a unit") {
  CLaurent a;  // z^{-2} (z - 1)
  a.set(-1, ComplexScalar(1));
  a.set(-2, ComplexScalar(-1));
  CLaurent b;  // z (z - 1)
  b.set(2, ComplexScalar(1));
  b.set(1, ComplexScalar(-1));
  CPoly d = poly_gcd(a, b);
  CPoly expected;  // z - 1
  expected.set(1, ComplexScalar(1));
  expected.set(0, ComplexScalar(-1));
  CHECK(d == expected);
}

TEST_CASE("component extraction and reassembly") {
  for (int trial = 0; trial < 30; ++trial) {
    QLaurent p = rand_qlaurent();
    CHECK(assemble(component(p, 0), component(p, 1), component(p, 2), component(p, 3)) ==
          p);
  }
}

TEST_CASE("qsnorm matches p times conj_quat(p) for vector-closed products") {
  for (int trial = 0; trial < 30; ++trial) {
    QLaurent p = rand_qlaurent();
    QLaurent prod = p * conj_quat(p);
    // The product is scalar; qsnorm returns exactly that scalar part.
    CHECK(component(prod, 1).is_zero());
    CHECK(component(prod, 2).is_zero());
    CHECK(component(prod, 3).is_zero());
    CHECK(qsnorm(p) == component(prod, 0));
  }
}
