#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <random>

#include "mincq/io.hpp"
#include "mincq/sylvester.hpp"

using namespace mincq;

namespace {

std::mt19937 rng(20240819);

Rational rand_rational() {
  std::uniform_int_distribution<int> num(-10, 10), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ComplexScalar rand_complex() { return {rand_rational(), rand_rational()}; }

ComplexQuaternion rand_quat() {
  return {rand_complex(), rand_complex(), rand_complex(), rand_complex()};
}

Eigen::Matrix4cd to_eigen(const FloatSylvesterMatrix& M) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = M.m[i][j];
  return m;
}

}  // namespace

TEST_CASE("matrix realizes the operator") {
  for (int trial = 0; trial < 100; ++trial) {
    ComplexQuaternion F = rand_quat(), G = rand_quat(), z = rand_quat();
    SylvesterMatrix M = operator_matrix(F, G);
    CHECK(M.apply(z) == F * z + z * G);
  }
}

TEST_CASE("closed-form determinant equals the 4x4 expansion") {
  for (int trial = 0; trial < 1000; ++trial) {
    ComplexQuaternion F = rand_quat(), G = rand_quat();
    SylvesterMatrix M = operator_matrix(F, G);
    CHECK(M.determinant() == det_closed_form(F, G));
  }
}

TEST_CASE("eigenvalue formula against a numeric eigensolver") {
  for (int trial = 0; trial < 50; ++trial) {
    ComplexQuaternion F = rand_quat(), G = rand_quat();
    FloatComplexQuaternion Ff(F), Gf(G);
    auto formula = eigenvalues(Ff, Gf);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(to_eigen(operator_matrix(Ff, Gf)));
    std::array<std::complex<double>, 4> numeric;
    for (int i = 0; i < 4; ++i) numeric[i] = es.eigenvalues()(i);
    auto key = [](const std::complex<double>& a, const std::complex<double>& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    };
    std::sort(formula.begin(), formula.end(), key);
    std::sort(numeric.begin(), numeric.end(), key);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(formula[i] - numeric[i]) < 1e-8 * (1 + std::abs(formula[i])));
  }
}

TEST_CASE("rank classification") {
  ComplexQuaternion i{ComplexScalar(0), ComplexScalar(1), ComplexScalar(0),
                      ComplexScalar(0)};
  ComplexQuaternion j{ComplexScalar(0), ComplexScalar(0), ComplexScalar(1),
                      ComplexScalar(0)};

  SUBCASE("real conjugate pairs are Rank2") {
    // F and -z G z^{-1} with real quaternions: F0 = -G0, |Fv| = |Gv|.
    for (int trial = 0; trial < 50; ++trial) {
      ComplexQuaternion z;
      do {
        z = {ComplexScalar(rand_rational()), ComplexScalar(rand_rational()),
             ComplexScalar(rand_rational()), ComplexScalar(rand_rational())};
      } while (z.snorm().is_zero());
      ComplexQuaternion G{ComplexScalar(rand_rational()), ComplexScalar(rand_rational()),
                          ComplexScalar(rand_rational()), ComplexScalar(rand_rational())};
      if (G.vector_part().is_zero()) continue;
      ComplexQuaternion F = -(z * G * z.inverse());
      CHECK(classify_rank(F, G) == SylvesterRank::Rank2);
      // The operator then annihilates z itself: F z + z G = 0.
      CHECK(F * z + z * G == ComplexQuaternion{});
    }
  }

  SUBCASE("scalar-degenerate when a vector part vanishes") {
    ComplexQuaternion scalar{ComplexScalar(3), ComplexScalar(0), ComplexScalar(0),
                             ComplexScalar(0)};
    CHECK(classify_rank(scalar, i + j) == SylvesterRank::ScalarDegenerate);
    CHECK(classify_rank(i, scalar) == SylvesterRank::ScalarDegenerate);
  }

  SUBCASE("generic pairs are Full with nonzero determinant") {
    // F = i, G = 2j: p0 = 0 but Fv^s = 1 != 4 = Gv^s, so det = 9.
    CHECK(classify_rank(i, j + j) == SylvesterRank::Full);
    CHECK(det_closed_form(i, j + j) == ComplexScalar(9));
    // F = i, G = j is singular (p0 = 0, Fv^s == Gv^s): rank 2.
    CHECK(classify_rank(i, j) == SylvesterRank::Rank2);
  }

  SUBCASE("published rank-3 pair") {
    auto inv = rank3_invariants();
    CHECK(classify_rank_invariants(inv[0], inv[1], inv[2], false, false) ==
          SylvesterRank::Rank3);
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(to_eigen(operator_matrix(rank3_F(), rank3_G())));
    auto sv = svd.singularValues();
    CHECK(sv(3) / sv(0) < 1e-10);
    CHECK(sv(2) / sv(0) > 1e-6);  // rank is exactly 3, not 2
  }

  SUBCASE("numeric rank oracle agrees with the exact class on random pairs") {
    for (int trial = 0; trial < 100; ++trial) {
      ComplexQuaternion F = rand_quat(), G = rand_quat();
      if (F.vector_part().is_zero() || G.vector_part().is_zero()) continue;
      SylvesterRank cls = classify_rank(F, G);
      Eigen::JacobiSVD<Eigen::Matrix4cd> svd(
          to_eigen(operator_matrix(FloatComplexQuaternion(F), FloatComplexQuaternion(G))));
      auto sv = svd.singularValues();
      int numeric_rank = 0;
      for (int s = 0; s < 4; ++s)
        if (sv(s) > 1e-9 * sv(0)) ++numeric_rank;
      if (cls == SylvesterRank::Full) CHECK(numeric_rank == 4);
      if (cls == SylvesterRank::Rank3) CHECK(numeric_rank == 3);
      if (cls == SylvesterRank::Rank2) CHECK(numeric_rank == 2);
    }
  }
}

TEST_CASE("conjugator solving") {
  QLaurent phi = catenoid_phi();
  QLaurent g(0, ComplexQuaternion::L());

  SUBCASE("chi = f h + h g intertwines f and g") {
    QLaurent h = find_invertible_h(phi, g);
    QLaurent chi = solve_conjugator(phi, g, h);
    CHECK(!qsnorm(chi).is_zero());
    CHECK(phi * chi == chi * g);
  }

  SUBCASE("richmond h = z^2 gives the printed chi") {
    QLaurent h(2, ComplexQuaternion::one());
    QLaurent chi = solve_conjugator(richmond_phi(), g, h);
    CHECK(chi == richmond_chi());
    CHECK(richmond_phi() * chi == chi * g);
  }

  SUBCASE("mismatched invariants are rejected") {
    QLaurent f(0, ComplexQuaternion::i());
    QLaurent gg(0, ComplexQuaternion{ComplexScalar(1), ComplexScalar(1), ComplexScalar(0),
                                     ComplexScalar(0)});
    CHECK_THROWS_AS(solve_conjugator(f, gg, QLaurent(0, ComplexQuaternion::one())),
                    ConjugacyObstruction);
  }
}
