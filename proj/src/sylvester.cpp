#include "mincq/sylvester.hpp"

namespace mincq {

namespace {

template <typename S, typename Q>
std::array<std::array<S, 4>, 4> build_matrix(const Q& F, const Q& G,
                                             const std::array<S, 4>& f,
                                             const std::array<S, 4>& g) {
  // Matrix of the system (syl2): rows/columns ordered (1, i, j, k).
  std::array<std::array<S, 4>, 4> m;
  S p0 = f[0] + g[0];
  m[0] = {p0, -(f[1] + g[1]), -(f[2] + g[2]), -(f[3] + g[3])};
  m[1] = {f[1] + g[1], p0, -(f[3] - g[3]), f[2] - g[2]};
  m[2] = {f[2] + g[2], f[3] - g[3], p0, -(f[1] - g[1])};
  m[3] = {f[3] + g[3], -(f[2] - g[2]), f[1] - g[1], p0};
  return m;
}

template <typename S>
S det4(const std::array<std::array<S, 4>, 4>& a) {
  auto det3 = [](S a00, S a01, S a02, S a10, S a11, S a12, S a20, S a21, S a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
  };
  S d{};
  for (int c = 0; c < 4; ++c) {
    S sub[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k)
        if (k != c) sub[r - 1][cc++] = a[r][k];
    }
    S minor = det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1], sub[1][2],
                   sub[2][0], sub[2][1], sub[2][2]);
    S term = a[0][c] * minor;
    d = (c % 2 == 0) ? d + term : d - term;
  }
  return d;
}

}  // namespace

ComplexQuaternion SylvesterMatrix::apply(const ComplexQuaternion& z) const {
  std::array<ComplexScalar, 4> v{z.z0, z.z1, z.z2, z.z3}, out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
  return {out[0], out[1], out[2], out[3]};
}

ComplexScalar SylvesterMatrix::determinant() const { return det4(m); }

SylvesterMatrix operator_matrix(const ComplexQuaternion& F, const ComplexQuaternion& G) {
  SylvesterMatrix s;
  s.m = build_matrix<ComplexScalar>(F, G, {F.z0, F.z1, F.z2, F.z3}, {G.z0, G.z1, G.z2, G.z3});
  return s;
}

FloatSylvesterMatrix operator_matrix(const FloatComplexQuaternion& F,
                                     const FloatComplexQuaternion& G) {
  FloatSylvesterMatrix s;
  s.m = build_matrix<std::complex<double>>(F, G, F.c, G.c);
  return s;
}

ComplexScalar det_closed_form(const ComplexQuaternion& F, const ComplexQuaternion& G) {
  ComplexScalar p0 = F.z0 + G.z0;
  ComplexScalar fs = F.vector_part().snorm(), gs = G.vector_part().snorm();
  ComplexScalar p02 = p0 * p0;
  return p02 * p02 + ComplexScalar(2) * p02 * (fs + gs) + (fs - gs) * (fs - gs);
}

std::complex<double> det_closed_form(const FloatComplexQuaternion& F,
                                     const FloatComplexQuaternion& G) {
  std::complex<double> p0 = F.c[0] + G.c[0];
  std::complex<double> fs = F.c[1] * F.c[1] + F.c[2] * F.c[2] + F.c[3] * F.c[3];
  std::complex<double> gs = G.c[1] * G.c[1] + G.c[2] * G.c[2] + G.c[3] * G.c[3];
  std::complex<double> p02 = p0 * p0;
  return p02 * p02 + 2.0 * p02 * (fs + gs) + (fs - gs) * (fs - gs);
}

std::array<std::complex<double>, 4> eigenvalues(const FloatComplexQuaternion& F,
                                                const FloatComplexQuaternion& G) {
  std::complex<double> a = F.c[0] + G.c[0];
  std::complex<double> sf =
      std::sqrt(F.c[1] * F.c[1] + F.c[2] * F.c[2] + F.c[3] * F.c[3]);
  std::complex<double> sg =
      std::sqrt(G.c[1] * G.c[1] + G.c[2] * G.c[2] + G.c[3] * G.c[3]);
  const std::complex<double> I(0, 1);
  return {a + I * (sf + sg), a + I * (sf - sg), a - I * (sf - sg), a - I * (sf + sg)};
}

SylvesterRank classify_rank(const ComplexQuaternion& F, const ComplexQuaternion& G) {
  return classify_rank_invariants(F.z0 + G.z0, F.vector_part().snorm(),
                                  G.vector_part().snorm(), F.vector_part().is_zero(),
                                  G.vector_part().is_zero());
}

SylvesterRank classify_rank_invariants(const ComplexScalar& p0, const ComplexScalar& fvs,
                                       const ComplexScalar& gvs, bool fv_zero,
                                       bool gv_zero) {
  if (fv_zero || gv_zero) return SylvesterRank::ScalarDegenerate;
  if (p0.is_zero() && fvs == gvs) return SylvesterRank::Rank2;
  ComplexScalar p2 = p0 * p0, d = fvs - gvs;
  ComplexScalar det = p2 * p2 + ComplexScalar(2) * p2 * (fvs + gvs) + d * d;
  if (det.is_zero()) return SylvesterRank::Rank3;
  return SylvesterRank::Full;
}

const char* to_string(SylvesterRank r) {
  switch (r) {
    case SylvesterRank::Full: return "Full";
    case SylvesterRank::Rank3: return "Rank3";
    case SylvesterRank::Rank2: return "Rank2";
    case SylvesterRank::ScalarDegenerate: return "ScalarDegenerate";
  }
  return "?";
}

QLaurent solve_conjugator(const QLaurent& f, const QLaurent& g, const QLaurent& h) {
  if (component(f, 0) != component(g, 0))
    throw ConjugacyObstruction("scalar parts differ: f0 != g0");
  auto vec_snorm = [](const QLaurent& p) {
    CLaurent s;
    for (int w = 1; w < 4; ++w) {
      CLaurent c = component(p, w);
      s += c * c;
    }
    return s;
  };
  if (vec_snorm(f) != vec_snorm(g))
    throw ConjugacyObstruction("vector norms differ: fv^s != gv^s");
  auto vector_part = [](const QLaurent& p) {
    return assemble(CLaurent{}, component(p, 1), component(p, 2), component(p, 3));
  };
  QLaurent chi = vector_part(f) * h + h * vector_part(g);
  if (qsnorm(chi).is_zero())
    throw NonInvertibleChi("chi^s = 0; retry with another h");
  return chi;
}

QLaurent find_invertible_h(const QLaurent& f, const QLaurent& g, int budget) {
  static const ComplexQuaternion basis[4] = {
      ComplexQuaternion::one(), ComplexQuaternion::i(), ComplexQuaternion::j(),
      ComplexQuaternion::k()};
  for (int n = 0; n < budget; ++n) {
    QLaurent h(n / 4, basis[n % 4]);
    try {
      (void)solve_conjugator(f, g, h);
      return h;
    } catch (const NonInvertibleChi&) {
      continue;
    }
  }
  throw SearchExhausted("no invertible chi within the h-candidate budget");
}

}  // namespace mincq
