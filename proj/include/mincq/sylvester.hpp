#pragma once

#include <array>
#include <complex>

#include "mincq/laurent.hpp"
#include "mincq/quaternion.hpp"

namespace mincq {

/// 4x4 matrix of the Sylvester operator S_{F,G}(z) = Fz + zG acting on the
/// coefficient vector (z0, z1, z2, z3).
struct SylvesterMatrix {
  std::array<std::array<ComplexScalar, 4>, 4> m{};

  ComplexQuaternion apply(const ComplexQuaternion& z) const;
  ComplexScalar determinant() const;
};

struct FloatSylvesterMatrix {
  std::array<std::array<std::complex<double>, 4>, 4> m{};
};

enum class SylvesterRank { Full, Rank3, Rank2, ScalarDegenerate };

const char* to_string(SylvesterRank r);

SylvesterMatrix operator_matrix(const ComplexQuaternion& F, const ComplexQuaternion& G);
FloatSylvesterMatrix operator_matrix(const FloatComplexQuaternion& F,
                                     const FloatComplexQuaternion& G);

/// (F0+G0)^4 + 2 (F0+G0)^2 (Fv^s + Gv^s) + (Fv^s - Gv^s)^2; the operator is
/// singular iff this vanishes.
ComplexScalar det_closed_form(const ComplexQuaternion& F, const ComplexQuaternion& G);
std::complex<double> det_closed_form(const FloatComplexQuaternion& F,
                                     const FloatComplexQuaternion& G);

/// The eigenvalue multiset {F0+G0 +- i(sqrt(Fv^s) +- sqrt(Gv^s))},
/// floating path.
std::array<std::complex<double>, 4> eigenvalues(const FloatComplexQuaternion& F,
                                                const FloatComplexQuaternion& G);

/// Rank class from the exact algebraic criteria of the closed-form
/// determinant; never decided from floating rank.
SylvesterRank classify_rank(const ComplexQuaternion& F, const ComplexQuaternion& G);

/// Same classification from the exact invariants p0 = F0 + G0, fvs = Fv^s,
/// gvs = Gv^s; usable when the components themselves are irrational but the
/// invariants are not.  fv_zero/gv_zero flag vanishing vector parts (note
/// that fvs == 0 does not imply Fv == 0 over the complex quaternions).
SylvesterRank classify_rank_invariants(const ComplexScalar& p0, const ComplexScalar& fvs,
                                       const ComplexScalar& gvs, bool fv_zero,
                                       bool gv_zero);

/// chi = f_v h + h g_v (vector parts).  Requires f0 == g0 and fv^s == gv^s
/// as exact Laurent identities; whenever qsnorm(chi) != 0, f chi = chi g
/// holds exactly.
QLaurent solve_conjugator(const QLaurent& f, const QLaurent& g, const QLaurent& h);

/// Walks the fixed candidate ladder h in {1, i, j, k, z, zi, zj, zk, z^2, ...}
/// until solve_conjugator yields chi with qsnorm(chi) != 0.
QLaurent find_invertible_h(const QLaurent& f, const QLaurent& g, int budget = 64);

}  // namespace mincq
